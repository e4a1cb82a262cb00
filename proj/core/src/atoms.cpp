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

#include <alp/atoms.hpp>

#include <algorithm>

namespace alp {

PredId AtomTable::predicate(const std::string& name, std::uint32_t arity, bool abducible) {
    if (auto p = find_predicate(name, arity)) {
        if (abducible) preds_[index(*p)].abducible = true;
        return *p;
    }
    preds_.push_back({name, arity, abducible});
    return static_cast<PredId>(preds_.size() - 1);
}

std::optional<PredId> AtomTable::find_predicate(const std::string& name, std::uint32_t arity) const {
    for (std::size_t i = 0; i < preds_.size(); ++i)
        if (preds_[i].arity == arity && preds_[i].name == name) return static_cast<PredId>(i);
    return std::nullopt;
}

std::size_t AtomTable::Hash::operator()(const GroundAtom& a) const {
    std::size_t h = index(a.pred) * 0x9e3779b97f4a7c15ull;
    for (const auto& v : a.args) h = (h ^ v.hash()) * 0x100000001b3ull;
    return h;
}

AtomId AtomTable::intern(PredId pred, std::vector<Value> args) {
    GroundAtom key{pred, std::move(args)};
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    auto id = atom_id(static_cast<std::uint32_t>(atoms_.size()));
    atoms_.push_back(key);
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<AtomId> AtomTable::find(const GroundAtom& atom) const {
    if (auto it = index_.find(atom); it != index_.end()) return it->second;
    return std::nullopt;
}

bool AtomTable::less(AtomId a, AtomId b) const {
    const GroundAtom& x = atom(a);
    const GroundAtom& y = atom(b);
    if (x.pred != y.pred) {
        const Predicate& p = pred(x.pred);
        const Predicate& q = pred(y.pred);
        if (p.name != q.name) return p.name < q.name;
        return p.arity < q.arity;
    }
    return std::lexicographical_compare(x.args.begin(), x.args.end(), y.args.begin(), y.args.end());
}

std::string AtomTable::str(AtomId id) const {
    const GroundAtom& a = atom(id);
    std::string s = pred(a.pred).name;
    if (a.args.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) s += ',';
        s += a.args[i].str();
    }
    s += ')';
    return s;
}

const char* to_string(TruthValue v) {
    switch (v) {
    case TruthValue::False: return "false";
    case TruthValue::True: return "true";
    case TruthValue::Undefined: return "undefined";
    }
    return "?";
}

std::vector<AtomId> AtomSet::members() const {
    std::vector<AtomId> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(atom_id(static_cast<std::uint32_t>(i)));
    return out;
}

std::vector<AtomId> Interpretation::with_value(TruthValue v) const {
    std::vector<AtomId> out;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] == v) out.push_back(atom_id(static_cast<std::uint32_t>(i)));
    return out;
}

} // namespace alp
