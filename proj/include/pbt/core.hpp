#pragma once

// Universes, concepts, labeled examples and the finite concept class
// container shared by every other part of the library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbt/errors.hpp"

namespace pbt {

using json = nlohmann::json;

/// An ordered list of distinct, opaque element labels. Indices 0..size-1
/// are stable and are the currency used by Concept and Sample.
class Universe {
public:
    Universe() = default;

    explicit Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
        std::set<std::string> seen;
        for (const auto& e : elements_) {
            if (!seen.insert(e).second)
                throw argument_error("universe labels must be pairwise distinct: " + e);
        }
    }

    /// Universe {"1","2",...,"k"}.
    static Universe numeric(std::size_t k, long long first = 1) {
        std::vector<std::string> labels;
        labels.reserve(k);
        for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(first + (long long)i));
        return Universe(std::move(labels));
    }

    std::size_t size() const { return elements_.size(); }
    const std::string& label(std::size_t i) const { return elements_.at(i); }
    const std::vector<std::string>& labels() const { return elements_; }

    std::optional<std::size_t> index_of(const std::string& label) const {
        auto it = std::find(elements_.begin(), elements_.end(), label);
        if (it == elements_.end()) return std::nullopt;
        return (std::size_t)(it - elements_.begin());
    }

    bool operator==(const Universe&) const = default;

private:
    std::vector<std::string> elements_;
};

/// Extensional concept: a membership bitvector over a universe.
/// Names live in FiniteClass and never affect equality.
class Concept {
public:
    Concept() = default;
    explicit Concept(std::vector<bool> membership) : bits_(std::move(membership)) {}

    static Concept empty(std::size_t universe_size) {
        return Concept(std::vector<bool>(universe_size, false));
    }

    static Concept of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
        std::vector<bool> b(universe_size, false);
        for (auto i : members) b.at(i) = true;
        return Concept(std::move(b));
    }

    std::size_t universe_size() const { return bits_.size(); }
    bool contains(std::size_t i) const { return bits_.at(i); }

    std::size_t cardinality() const {
        return (std::size_t)std::count(bits_.begin(), bits_.end(), true);
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> m;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) m.push_back(i);
        return m;
    }

    const std::vector<bool>& bits() const { return bits_; }

    bool subset_of(const Concept& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !other.bits_[i]) return false;
        return true;
    }

    auto operator<=>(const Concept&) const = default;

private:
    std::vector<bool> bits_;
};

enum class Sign { negative = 0, positive = 1 };

inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

struct LabeledExample {
    std::size_t element = 0;
    Sign sign = Sign::positive;

    auto operator<=>(const LabeledExample&) const = default;
};

/// A set of labeled examples. Canonicalized as sorted (element, sign)
/// pairs; no element may carry both signs.
class Sample {
public:
    Sample() = default;

    explicit Sample(std::vector<LabeledExample> examples) {
        for (const auto& ex : examples) add(ex);
    }

    void add(LabeledExample ex) {
        auto it = std::lower_bound(examples_.begin(), examples_.end(), ex);
        if (it != examples_.end() && *it == ex) return;
        for (const auto& other : examples_)
            if (other.element == ex.element && other.sign != ex.sign)
                throw argument_error("element " + std::to_string(ex.element) +
                                     " would appear with both signs");
        examples_.insert(it, ex);
    }

    std::size_t size() const { return examples_.size(); }
    bool empty() const { return examples_.empty(); }
    const std::vector<LabeledExample>& examples() const { return examples_; }

    std::vector<std::size_t> positives() const { return side(Sign::positive); }
    std::vector<std::size_t> negatives() const { return side(Sign::negative); }

    bool contains(LabeledExample ex) const {
        return std::binary_search(examples_.begin(), examples_.end(), ex);
    }

    auto operator<=>(const Sample&) const = default;

private:
    std::vector<std::size_t> side(Sign s) const {
        std::vector<std::size_t> out;
        for (const auto& ex : examples_)
            if (ex.sign == s) out.push_back(ex.element);
        return out;
    }

    std::vector<LabeledExample> examples_;  // sorted, deduplicated
};

/// Named, pairwise-distinct concepts over a shared universe.
class FiniteClass {
public:
    FiniteClass() = default;

    FiniteClass(Universe universe, std::vector<std::pair<std::string, Concept>> concepts)
        : universe_(std::move(universe)) {
        for (auto& [name, c] : concepts) add(name, std::move(c));
    }

    void add(const std::string& name, Concept c) {
        if (c.universe_size() != universe_.size())
            throw argument_error("concept '" + name + "' has wrong bitvector length");
        for (const auto& [n, existing] : concepts_) {
            if (n == name) throw argument_error("duplicate concept name: " + name);
            if (existing == c) throw argument_error("duplicate concept bitvector: " + name);
        }
        concepts_.emplace_back(name, std::move(c));
    }

    const Universe& universe() const { return universe_; }
    std::size_t size() const { return concepts_.size(); }
    const Concept& concept_at(std::size_t i) const { return concepts_.at(i).second; }
    const std::string& name_at(std::size_t i) const { return concepts_.at(i).first; }

    std::optional<std::size_t> index_of(const Concept& c) const {
        for (std::size_t i = 0; i < concepts_.size(); ++i)
            if (concepts_[i].second == c) return i;
        return std::nullopt;
    }

    bool operator==(const FiniteClass&) const = default;

private:
    Universe universe_;
    std::vector<std::pair<std::string, Concept>> concepts_;
};

/// True iff T+ is included in c and T- avoids c.
inline bool is_consistent(const Concept& c, const Sample& t) {
    for (const auto& ex : t.examples()) {
        if (ex.element >= c.universe_size())
            throw argument_error("example index out of range: " + std::to_string(ex.element));
        bool in = c.contains(ex.element);
        if (in != (ex.sign == Sign::positive)) return false;
    }
    return true;
}

/// True iff t is consistent with l but not with l2.
inline bool distinguishes(const Sample& t, const Concept& l, const Concept& l2) {
    return is_consistent(l, t) && !is_consistent(l2, t);
}

/// All labeled examples (x, l(x)) at positions where l and l2 disagree.
/// Any sample distinguishing l from l2 must contain one of these.
inline std::vector<LabeledExample> difference_witnesses(const Concept& l, const Concept& l2) {
    if (l == l2) throw argument_error("difference_witnesses: concepts are equal");
    std::vector<LabeledExample> out;
    for (std::size_t i = 0; i < l.universe_size(); ++i)
        if (l.contains(i) != l2.contains(i))
            out.push_back({i, l.contains(i) ? Sign::positive : Sign::negative});
    return out;
}

// --- persistence -----------------------------------------------------------
//
// {"universe": ["x1", ...], "concepts": {"name": [0|1, ...], ...}}

inline json save_class(const FiniteClass& cls) {
    json j;
    j["universe"] = cls.universe().labels();
    json rows = json::object();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        json row = json::array();
        for (bool b : cls.concept_at(i).bits()) row.push_back(b ? 1 : 0);
        rows[cls.name_at(i)] = std::move(row);
    }
    j["concepts"] = std::move(rows);
    return j;
}

inline FiniteClass load_class(const json& j) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("concepts"))
        throw parse_error("class document must contain 'universe' and 'concepts'");
    std::vector<std::string> labels;
    try {
        labels = j.at("universe").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad universe: ") + e.what());
    }
    Universe u;
    try {
        u = Universe(std::move(labels));
    } catch (const argument_error& e) {
        throw parse_error(e.what());
    }
    FiniteClass cls(u, {});
    const auto& rows = j.at("concepts");
    if (!rows.is_object()) throw parse_error("'concepts' must be an object");
    for (auto it = rows.begin(); it != rows.end(); ++it) {
        const auto& row = it.value();
        if (!row.is_array() || row.size() != u.size())
            throw parse_error("row '" + it.key() + "' has length " +
                              std::to_string(row.size()) + ", expected " +
                              std::to_string(u.size()));
        std::vector<bool> bits;
        bits.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number_integer() || (v != 0 && v != 1))
                throw parse_error("row '" + it.key() + "' contains a value other than 0/1");
            bits.push_back(v == 1);
        }
        try {
            cls.add(it.key(), Concept(std::move(bits)));
        } catch (const argument_error& e) {
            throw parse_error(std::string(e.what()) + " (row '" + it.key() + "')");
        }
    }
    return cls;
}

}  // namespace pbt
