// pbtlab: command-line laboratory for exact teaching-dimension
// computations, linear-set and halfspace teaching protocols, and the
// paper-reproduction suite.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 resource-budget exhaustion. PBTLAB_BUDGET_MS caps wall time.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbt/closure.hpp"
#include "pbt/errors.hpp"
#include "pbt/finite_dims.hpp"
#include "pbt/halfspaces.hpp"
#include "pbt/linset_teach.hpp"
#include "pbt/numsg.hpp"
#include "pbt/pbtd_one.hpp"
#include "pbt/verify.hpp"

namespace {

using nlohmann::json;
using pbt::numsg::Int;

constexpr const char* kVersion = "1.0.0";

bool g_pretty = false;
unsigned g_seed = 0;

void emit(const std::string& command, json inputs, json results,
          std::chrono::steady_clock::time_point t0) {
    json report{
        {"tool", "pbtlab"},
        {"version", kVersion},
        {"command", command},
        {"inputs", std::move(inputs)},
        {"results", std::move(results)},
        {"millis", std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count()},
    };
    std::cout << report.dump(g_pretty ? 2 : -1) << "\n";
}

std::vector<Int> parse_ints(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw pbt::argument_error("not an integer: '" + tok + "'");
        }
    }
    if (out.empty()) throw pbt::argument_error("empty integer list");
    return out;
}

std::vector<pbt::hs::Rational> parse_rationals(const std::string& csv) {
    std::vector<pbt::hs::Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(pbt::closure::parse_rational(tok));
    if (out.empty()) throw pbt::argument_error("empty rational list");
    return out;
}

json linset_json(const pbt::numsg::LinearSetRep& rep) {
    return {
        {"variant", rep.variant() == pbt::numsg::Variant::erasing ? "erasing" : "non_erasing"},
        {"shift", rep.shift()},
        {"gstar", rep.gstar().values()},
        {"ne_sum", rep.ne_sum()},
    };
}

json qvec_json(const pbt::hs::QVec& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(pbt::closure::rational_str(r));
    return a;
}

json examples_json(const std::vector<pbt::hs::SignedExample>& examples) {
    json a = json::array();
    for (const auto& ex : examples) a.push_back({{"x", qvec_json(ex.x)}, {"y", ex.label}});
    return a;
}

std::vector<pbt::hs::SignedExample> parse_examples(const std::string& text, std::size_t d) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw pbt::parse_error(std::string("bad examples JSON: ") + e.what());
    }
    if (!j.is_array()) throw pbt::parse_error("examples must be a JSON array");
    std::vector<pbt::hs::SignedExample> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("x") || !item.contains("y"))
            throw pbt::parse_error("each example needs fields 'x' and 'y'");
        pbt::hs::SignedExample ex;
        for (const auto& c : item.at("x")) {
            if (c.is_number_integer())
                ex.x.push_back(pbt::hs::Rational((long long)c));
            else if (c.is_string())
                ex.x.push_back(pbt::closure::parse_rational(c.get<std::string>()));
            else
                throw pbt::parse_error("coordinates must be integers or 'p/q' strings");
        }
        if (ex.x.size() != d) throw pbt::parse_error("example has wrong dimension");
        int y = item.at("y").get<int>();
        if (y != 1 && y != -1) throw pbt::parse_error("labels must be +1 or -1");
        ex.label = y;
        out.push_back(std::move(ex));
    }
    return out;
}

pbt::FiniteClass load_class_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pbt::argument_error("cannot open class file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw pbt::parse_error(std::string("bad class JSON: ") + e.what());
    }
    // accept either a bare class document or a `pbtlab gallery` report
    if (j.is_object() && j.contains("results") && j["results"].is_object() &&
        j["results"].contains("class"))
        j = j["results"]["class"];
    return pbt::load_class(j);
}

json sample_json(const pbt::FiniteClass& cls, const pbt::Sample& s) {
    json pos = json::array(), neg = json::array();
    for (const auto& ex : s.examples())
        (ex.sign == pbt::Sign::positive ? pos : neg).push_back(cls.universe().label(ex.element));
    return {{"pos", pos}, {"neg", neg}};
}

json dim_json(const pbt::Dim& d) {
    if (d.is_infinite()) return "INFINITE";
    return d.value();
}

json order_witness_json(const pbt::FiniteClass& cls, const pbt::OrderWitness& w) {
    json order = json::array();
    for (auto i : w.order) order.push_back(cls.name_at(i));
    json map = json::object();
    for (std::size_t i = 0; i < cls.size(); ++i) map[cls.name_at(i)] = sample_json(cls, w.map.at(i));
    return {{"order", order}, {"map", map}};
}

// ---------------------------------------------------------------------------

void cmd_dims(const std::string& file, bool all, std::size_t max_concepts) {
    auto t0 = std::chrono::steady_clock::now();
    auto cls = load_class_file(file);
    pbt::SearchBudget budget;
    budget.max_concepts_order = max_concepts;

    json results;
    results["td"] = pbt::td(cls);
    results["td_min"] = pbt::td_min(cls);

    auto r = pbt::rtd(cls);
    json rounds = json::array();
    for (const auto& round : std::get<pbt::SequenceWitness>(r.witness).rounds) {
        json names = json::array();
        for (auto i : round.concepts) names.push_back(cls.name_at(i));
        rounds.push_back({{"concepts", names}, {"dimension", dim_json(round.dimension)}});
    }
    results["rtd"] = {{"value", dim_json(r.value)}, {"rounds", rounds}};

    auto p = pbt::pbtd_bruteforce(cls, budget);
    results["pbtd"] = {{"value", dim_json(p.value)},
                       {"witness", order_witness_json(cls, std::get<pbt::OrderWitness>(p.witness))}};

    if (all) {
        results["rtd_plus"] = dim_json(pbt::rtd_plus(cls).value);
        results["pbtd_plus"] = dim_json(pbt::pbtd_plus_bruteforce(cls, budget).value);
    }

    if (g_pretty) {
        std::cerr << "td=" << results["td"] << " td_min=" << results["td_min"]
                  << " rtd=" << results["rtd"]["value"] << " pbtd=" << results["pbtd"]["value"]
                  << "\n";
    }
    emit("dims", {{"file", file}, {"all", all}}, results, t0);
}

void cmd_pbtd1(const std::string& file, bool plus) {
    auto t0 = std::chrono::steady_clock::now();
    auto cls = load_class_file(file);
    json results;
    if (plus) {
        auto w = pbt::decide_pbtd_plus_1(cls);
        results["pbtd_plus_1"] = w.has_value();
        if (w) {
            json order = json::array();
            for (auto i : w->order) order.push_back(cls.name_at(i));
            json chooser = json::object();
            for (std::size_t i = 0; i < cls.size(); ++i)
                chooser[cls.name_at(i)] = w->chooser[i] == pbt::no_element
                                              ? json(nullptr)
                                              : json(cls.universe().label(w->chooser[i]));
            results["witness"] = {{"order", order}, {"chooser", chooser}};
        }
    } else {
        auto w = pbt::decide_pbtd_1(cls);
        results["pbtd_1"] = w.has_value();
        if (w) {
            json order = json::array();
            for (auto i : w->order) order.push_back(cls.name_at(i));
            json labels = json::object();
            for (std::size_t i = 0; i < cls.size(); ++i) labels[cls.name_at(i)] = sample_json(cls, w->tm.at(i));
            results["witness"] = {{"order", order}, {"labels", labels}};
        }
        auto cl = pbt::classify_singleton_extension(cls);
        static const char* kinds[] = {"pure_singletons", "plus_empty", "plus_pair", "not_pbtd1",
                                      "not_applicable"};
        results["singleton_extension"] = kinds[(int)cl.kind];
    }
    emit("pbtd1", {{"file", file}, {"plus", plus}}, results, t0);
}

void cmd_teach_linset(const std::string& variant, std::size_t k, const std::string& gens,
                      Int shift) {
    auto t0 = std::chrono::steady_clock::now();
    using namespace pbt::linset;
    GeneratorSet g(parse_ints(gens));
    LinsetSample sample;
    LinearSetRep concept_rep;
    if (variant == "linset") {
        sample = teach_linset(g, k);
        concept_rep = LinearSetRep::linset(g);
    } else if (variant == "nelinset") {
        sample = teach_nelinset(g);
        concept_rep = LinearSetRep::nelinset(g);
    } else if (variant == "shifted") {
        sample = teach_shifted_linset(g, shift, k);
        concept_rep = LinearSetRep::linset(g, shift);
    } else if (variant == "shifted-nelinset") {
        sample = teach_shifted_nelinset(g, shift, k);
        concept_rep = LinearSetRep::nelinset(g, shift);
    } else {
        throw pbt::argument_error("unknown variant: " + variant);
    }
    emit("teach-linset",
         {{"variant", variant}, {"k", k}, {"generators", g.values()}, {"shift", shift}},
         {{"sample", sample}, {"concept", linset_json(concept_rep)}}, t0);
}

void cmd_decode_linset(const std::string& variant, std::size_t k, const std::string& examples) {
    auto t0 = std::chrono::steady_clock::now();
    using namespace pbt::linset;
    auto sample = make_sample(parse_ints(examples));
    LinearSetRep decoded;
    if (variant == "linset")
        decoded = student_linset(sample, k);
    else if (variant == "nelinset")
        decoded = student_nelinset(sample, k);
    else if (variant == "shifted")
        decoded = student_shifted_linset(sample, k);
    else if (variant == "shifted-nelinset")
        decoded = student_shifted_nelinset(sample, k);
    else
        throw pbt::argument_error("unknown variant: " + variant);
    emit("decode-linset", {{"variant", variant}, {"k", k}, {"examples", sample}},
         {{"concept", linset_json(decoded)}}, t0);
}

void cmd_teach_halfspace(const std::string& w_csv, int b) {
    auto t0 = std::chrono::steady_clock::now();
    using namespace pbt::hs;
    QVec w = parse_rationals(w_csv);
    auto examples = teach_general(w, b);
    Halfspace target = canonical({w, b});
    emit("teach-halfspace", {{"w", qvec_json(w)}, {"b", b}},
         {{"target", {{"w", qvec_json(target.w)}, {"b", pbt::closure::rational_str(target.b)}}},
          {"examples", examples_json(examples)}},
         t0);
}

void cmd_decode_halfspace(std::size_t d, const std::string& examples_text) {
    auto t0 = std::chrono::steady_clock::now();
    using namespace pbt::hs;
    auto examples = parse_examples(examples_text, d);
    DecodeTrace trace;
    Halfspace h = decode_general(examples, d, &trace);
    emit("decode-halfspace", {{"d", d}, {"examples", json::parse(examples_text)}},
         {{"w", qvec_json(h.w)},
          {"b", pbt::closure::rational_str(h.b)},
          {"trace",
           {{"homogeneous", trace.homogeneous},
            {"reduced_dim", trace.reduced_dim},
            {"b", pbt::closure::rational_str(trace.b)},
            {"w_d", pbt::closure::rational_str(trace.w_d)},
            {"head_zero", trace.head_zero},
            {"l1", pbt::closure::rational_str(trace.l1)}}}},
         t0);
}

void cmd_frobenius(const std::string& gens) {
    auto t0 = std::chrono::steady_clock::now();
    pbt::numsg::GeneratorSet g(parse_ints(gens));
    emit("frobenius", {{"gens", g.values()}}, {{"frobenius", pbt::numsg::frobenius(g)}}, t0);
}

void cmd_special(std::size_t k, Int n, const std::string& gens) {
    auto t0 = std::chrono::steady_clock::now();
    using namespace pbt::numsg;
    auto cert = is_special(k, n, GeneratorSet(parse_ints(gens)));
    json results{{"passed", cert.passed}};
    if (!cert.passed) results["failure"] = cert.failure;
    if (cert.failure.empty() || cert.q != 0) {
        results["a"] = cert.a;
        results["frobenius"] = cert.frobenius;
        results["q"] = cert.q;
        results["apery"] = cert.apery.t;
        results["t_max"] = cert.apery.t_max;
    }
    emit("special", {{"k", k}, {"n", n}, {"gens", cert.P.values()}}, results, t0);
    if (!cert.passed) std::exit(1);
}

void cmd_enumerate(const std::string& variant, std::size_t k, Int bound, bool shifted,
                   Int fixed_shift, bool has_fixed_shift, std::size_t max_candidates) {
    auto t0 = std::chrono::steady_clock::now();
    using namespace pbt::numsg;
    ClassVariant v;
    if (variant == "LINSET")
        v = ClassVariant::LINSET;
    else if (variant == "CFLINSET")
        v = ClassVariant::CFLINSET;
    else if (variant == "NELINSET")
        v = ClassVariant::NELINSET;
    else if (variant == "NECFLINSET")
        v = ClassVariant::NECFLINSET;
    else
        throw pbt::argument_error("unknown variant: " + variant);
    EnumerateOptions opt{.k = k, .bound = bound, .shifted = shifted};
    if (has_fixed_shift) opt.fixed_shift = fixed_shift;
    opt.max_candidates = max_candidates;
    auto reps = enumerate_class(v, opt);
    json list = json::array();
    for (const auto& rep : reps) list.push_back(linset_json(rep));
    emit("enumerate-class",
         {{"variant", variant}, {"k", k}, {"bound", bound}, {"shifted", shifted}},
         {{"count", reps.size()}, {"concepts", list}}, t0);
}

void cmd_floor_check(std::size_t k, Int n, const std::string& gens, std::size_t size, Int bound,
                     Int window) {
    auto t0 = std::chrono::steady_clock::now();
    using namespace pbt::numsg;
    GeneratorSet p(parse_ints(gens));
    auto cert = is_special(k, n, p);
    auto cls = enumerate_class(ClassVariant::NECFLINSET,
                               {.k = k, .bound = bound, .fixed_shift = n});
    auto l = LinearSetRep::linset(p, n);
    if (window < 0) window = l.periodicity_threshold() + bound;
    bool floor = weak_spanning_floor(l, cls, size, window);
    emit("floor-check",
         {{"k", k},
          {"n", n},
          {"gens", p.values()},
          {"size", size},
          {"bound", bound},
          {"window", window}},
         {{"special", cert.passed},
          {"failure", cert.failure},
          {"class_size", cls.size()},
          {"floor_holds", floor}},
         t0);
    if (!(cert.passed && floor)) std::exit(1);
}

void cmd_gallery(const std::string& name, std::size_t k, std::size_t l, bool has_l) {
    auto t0 = std::chrono::steady_clock::now();
    pbt::FiniteClass cls;
    if (name == "powerset")
        cls = pbt::powerset_class(k);
    else if (name == "k_choose_l")
        cls = pbt::k_choose_l_class(k, has_l ? l : 0);
    else if (name == "Lk_window")
        cls = pbt::lk_window_class(k);
    else if (name == "Lkl_window")
        cls = pbt::lkl_window_class(k, has_l ? l : 0);
    else if (name == "F_signclass")
        cls = pbt::hs::f_signclass();
    else
        throw pbt::argument_error("unknown gallery class: " + name);
    emit("gallery", {{"name", name}, {"k", k}}, {{"class", pbt::save_class(cls)}}, t0);
}

int cmd_verify_paper() {
    auto t0 = std::chrono::steady_clock::now();
    auto checks = pbt::verify::run_paper_checks(g_seed);
    json list = json::array();
    bool all = true;
    for (const auto& c : checks) {
        list.push_back({{"id", c.id},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"detail", c.detail},
                        {"millis", c.millis}});
        all = all && c.pass;
        if (g_pretty)
            std::cerr << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.name
                      << (c.detail.empty() ? "" : "  -- " + c.detail) << "\n";
    }
    emit("verify-paper", {{"suite", "all"}, {"seed", g_seed}},
         {{"all_pass", all}, {"checks", list}}, t0);
    return all ? 0 : 1;
}

/// Runs fn under the wall-clock budget from PBTLAB_BUDGET_MS, if set.
int with_budget(const std::function<int()>& fn) {
    const char* env = std::getenv("PBTLAB_BUDGET_MS");
    if (!env || !*env) return fn();
    long long ms = std::atoll(env);
    if (ms <= 0) return fn();
    auto fut = std::async(std::launch::async, fn);
    if (fut.wait_for(std::chrono::milliseconds(ms)) == std::future_status::timeout) {
        std::cerr << "pbtlab: wall-clock budget of " << ms << " ms exhausted\n";
        std::_Exit(3);
    }
    return fut.get();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for preference-based teaching"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "human-readable rendering on stderr, indented JSON");
    app.add_option("--seed", g_seed, "seed for randomized suites");

    std::function<int()> action;

    // dims
    {
        auto* c = app.add_subcommand("dims", "teaching dimensions of a class file");
        auto file = std::make_shared<std::string>();
        auto all = std::make_shared<bool>(false);
        auto maxc = std::make_shared<std::size_t>(9);
        c->add_option("file", *file, "class JSON file")->required();
        c->add_flag("--all", *all, "include positive-example-only dimensions");
        c->add_option("--max-concepts", *maxc, "order-search budget");
        c->callback([=, &action] { action = [=] { cmd_dims(*file, *all, *maxc); return 0; }; });
    }
    // pbtd1
    {
        auto* c = app.add_subcommand("pbtd1", "decide whether one example per concept suffices");
        auto file = std::make_shared<std::string>();
        auto plus = std::make_shared<bool>(false);
        c->add_option("file", *file, "class JSON file")->required();
        c->add_flag("--plus", *plus, "positive examples only");
        c->callback([=, &action] { action = [=] { cmd_pbtd1(*file, *plus); return 0; }; });
    }
    // teach-linset / decode-linset
    {
        auto* c = app.add_subcommand("teach-linset", "emit the teaching sample of a linear set");
        auto variant = std::make_shared<std::string>("linset");
        auto k = std::make_shared<std::size_t>(4);
        auto gens = std::make_shared<std::string>();
        auto shift = std::make_shared<Int>(0);
        c->add_option("--variant", *variant, "linset|nelinset|shifted|shifted-nelinset");
        c->add_option("-k,--k", *k, "generator budget");
        c->add_option("--generators", *gens, "comma-separated generators")->required();
        c->add_option("--shift", *shift, "shift constant");
        c->callback([=, &action] {
            action = [=] { cmd_teach_linset(*variant, *k, *gens, *shift); return 0; };
        });
    }
    {
        auto* c = app.add_subcommand("decode-linset", "decode a linear-set teaching sample");
        auto variant = std::make_shared<std::string>("linset");
        auto k = std::make_shared<std::size_t>(4);
        auto examples = std::make_shared<std::string>();
        c->add_option("--variant", *variant, "linset|nelinset|shifted|shifted-nelinset");
        c->add_option("-k,--k", *k, "generator budget");
        c->add_option("--examples", *examples, "comma-separated positive examples")->required();
        c->callback([=, &action] {
            action = [=] { cmd_decode_linset(*variant, *k, *examples); return 0; };
        });
    }
    // teach-halfspace / decode-halfspace
    {
        auto* c = app.add_subcommand("teach-halfspace", "emit the teaching sample of a halfspace");
        auto w = std::make_shared<std::string>();
        auto b = std::make_shared<int>(0);
        c->add_option("--w", *w, "comma-separated rational weights (p/q)")->required();
        c->add_option("--b", *b, "bias, -1, 0 or +1");
        c->callback([=, &action] { action = [=] { cmd_teach_halfspace(*w, *b); return 0; }; });
    }
    {
        auto* c = app.add_subcommand("decode-halfspace", "decode a halfspace teaching sample");
        auto d = std::make_shared<std::size_t>();
        auto examples = std::make_shared<std::string>();
        c->add_option("--d", *d, "ambient dimension")->required();
        c->add_option("--examples", *examples, "JSON array [{\"x\":[...],\"y\":1},...]")
            ->required();
        c->callback([=, &action] {
            action = [=] { cmd_decode_halfspace(*d, *examples); return 0; };
        });
    }
    // frobenius / special / enumerate-class / floor-check
    {
        auto* c = app.add_subcommand("frobenius", "largest natural outside the span");
        auto gens = std::make_shared<std::string>();
        c->add_option("--gens", *gens, "comma-separated generators")->required();
        c->callback([=, &action] { action = [=] { cmd_frobenius(*gens); return 0; }; });
    }
    {
        auto* c = app.add_subcommand("special", "check the (k,N)-special-set certificate");
        auto k = std::make_shared<std::size_t>();
        auto n = std::make_shared<Int>();
        auto gens = std::make_shared<std::string>();
        c->add_option("--k", *k, "cardinality")->required();
        c->add_option("--n", *n, "magnitude bound N")->required();
        c->add_option("--gens", *gens, "comma-separated generators")->required();
        c->callback([=, &action] { action = [=] { cmd_special(*k, *n, *gens); return 0; }; });
    }
    {
        auto* c = app.add_subcommand("enumerate-class", "enumerate a linear-set family");
        auto variant = std::make_shared<std::string>();
        auto k = std::make_shared<std::size_t>(1);
        auto bound = std::make_shared<Int>(1);
        auto shifted = std::make_shared<bool>(false);
        auto fixed_shift = std::make_shared<Int>(0);
        auto maxc = std::make_shared<std::size_t>(2'000'000);
        c->add_option("--variant", *variant, "LINSET|CFLINSET|NELINSET|NECFLINSET")->required();
        c->add_option("--k", *k, "max generators");
        c->add_option("--bound", *bound, "generator bound");
        c->add_flag("--shifted", *shifted, "include shifts 0..bound");
        auto* fs = c->add_option("--fixed-shift", *fixed_shift, "force shift N, sums <= N");
        c->add_option("--max-candidates", *maxc, "enumeration budget");
        c->callback([=, &action] {
            bool has_fs = fs->count() > 0;
            action = [=] {
                cmd_enumerate(*variant, *k, *bound, *shifted, *fixed_shift, has_fs, *maxc);
                return 0;
            };
        });
    }
    {
        auto* c = app.add_subcommand("floor-check",
                                     "weak-spanning floor of a shifted semigroup in its family");
        auto k = std::make_shared<std::size_t>();
        auto n = std::make_shared<Int>();
        auto gens = std::make_shared<std::string>();
        auto size = std::make_shared<std::size_t>(1);
        auto bound = std::make_shared<Int>(10);
        auto window = std::make_shared<Int>(-1);
        c->add_option("--k", *k, "family cardinality parameter")->required();
        c->add_option("--n", *n, "shift / magnitude N")->required();
        c->add_option("--gens", *gens, "generators of the target")->required();
        c->add_option("--size", *size, "subset size to rule out");
        c->add_option("--bound", *bound, "generator bound of the family");
        c->add_option("--window", *window, "element window (default: periodicity threshold)");
        c->callback([=, &action] {
            action = [=] {
                cmd_floor_check(*k, *n, *gens, *size, *bound, *window);
                return 0;
            };
        });
    }
    // gallery / verify-paper
    {
        auto* c = app.add_subcommand("gallery", "emit a built-in finite class as JSON");
        auto name = std::make_shared<std::string>();
        auto k = std::make_shared<std::size_t>(2);
        auto l = std::make_shared<std::size_t>(0);
        c->add_option("--name", *name,
                      "powerset|k_choose_l|Lk_window|Lkl_window|F_signclass")
            ->required();
        c->add_option("-k,--k", *k, "universe parameter");
        auto* lopt = c->add_option("--l", *l, "slice parameter");
        c->callback([=, &action] {
            bool has_l = lopt->count() > 0;
            action = [=] { cmd_gallery(*name, *k, *l, has_l); return 0; };
        });
    }
    {
        auto* c = app.add_subcommand("verify-paper", "run the full reproduction suite");
        auto suite = std::make_shared<std::string>("all");
        c->add_option("--suite", *suite, "only 'all' is defined");
        c->callback([=, &action] {
            action = [=] {
                if (*suite != "all") throw pbt::argument_error("unknown suite: " + *suite);
                return cmd_verify_paper();
            };
        });
    }

    // let global flags (--pretty, --seed) appear after the subcommand too
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return with_budget(action);
    } catch (const pbt::resource_error& e) {
        std::cerr << "pbtlab: resource budget: " << e.what() << "\n";
        return 3;
    } catch (const pbt::error& e) {
        std::cerr << "pbtlab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pbtlab: " << e.what() << "\n";
        return 2;
    }
}
