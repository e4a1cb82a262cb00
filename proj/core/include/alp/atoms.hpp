//
// Copyright (c) 2026 The alp authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//

#pragma once

#include <alp/model.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace alp {

enum class AtomId : std::uint32_t {};
enum class PredId : std::uint32_t {};

constexpr std::uint32_t index(AtomId a) { return static_cast<std::uint32_t>(a); }
constexpr std::uint32_t index(PredId p) { return static_cast<std::uint32_t>(p); }
constexpr AtomId atom_id(std::uint32_t i) { return static_cast<AtomId>(i); }

struct Predicate {
    std::string name;
    std::uint32_t arity = 0;
    bool abducible = false;
};

struct GroundAtom {
    PredId pred{};
    std::vector<Value> args;
    friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
};

/// Bijective interning of ground atoms to dense ids.
class AtomTable {
public:
    PredId predicate(const std::string& name, std::uint32_t arity, bool abducible = false);
    std::optional<PredId> find_predicate(const std::string& name, std::uint32_t arity) const;
    const Predicate& pred(PredId p) const { return preds_[index(p)]; }
    std::size_t num_predicates() const { return preds_.size(); }

    AtomId intern(PredId pred, std::vector<Value> args);
    std::optional<AtomId> find(const GroundAtom& atom) const;
    const GroundAtom& atom(AtomId id) const { return atoms_[index(id)]; }
    std::size_t size() const { return atoms_.size(); }

    bool is_abducible(AtomId id) const { return pred(atom(id).pred).abducible; }
    /// Total order by predicate name, arity, then arguments.
    bool less(AtomId a, AtomId b) const;
    std::string str(AtomId id) const;

private:
    struct Hash {
        std::size_t operator()(const GroundAtom& a) const;
    };
    std::vector<Predicate> preds_;
    std::vector<GroundAtom> atoms_;
    std::unordered_map<GroundAtom, AtomId, Hash> index_;
};

/// Ground normal rule `head :- pos, not neg`.
struct GroundClause {
    AtomId head{};
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
    friend bool operator==(const GroundClause&, const GroundClause&) = default;
};

enum class TruthValue : std::uint8_t { False, True, Undefined };

const char* to_string(TruthValue v);

/// Dense set of atom ids.
class AtomSet {
public:
    AtomSet() = default;
    explicit AtomSet(std::size_t universe) : bits_(universe, 0) {}

    bool contains(AtomId a) const { return index(a) < bits_.size() && bits_[index(a)] != 0; }
    /// Returns true if the atom was not yet present.
    bool insert(AtomId a) {
        if (index(a) >= bits_.size()) bits_.resize(index(a) + 1, 0);
        if (bits_[index(a)]) return false;
        bits_[index(a)] = 1;
        ++count_;
        return true;
    }
    std::size_t size() const { return count_; }
    std::size_t universe() const { return bits_.size(); }
    std::vector<AtomId> members() const;

    friend bool operator==(const AtomSet& a, const AtomSet& b) { return a.members() == b.members(); }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

/// Three-valued assignment, total over the atoms of one theory.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t atoms, TruthValue init = TruthValue::False) : values_(atoms, init) {}

    TruthValue operator[](AtomId a) const { return values_[index(a)]; }
    void set(AtomId a, TruthValue v) { values_[index(a)] = v; }
    std::size_t size() const { return values_.size(); }
    bool is_true(AtomId a) const { return values_[index(a)] == TruthValue::True; }
    bool is_false(AtomId a) const { return values_[index(a)] == TruthValue::False; }

    std::vector<AtomId> with_value(TruthValue v) const;
    friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
    std::vector<TruthValue> values_;
};

/// One abductive solution: a sorted set of ground abducible atoms.
using Delta = std::vector<AtomId>;

} // namespace alp
