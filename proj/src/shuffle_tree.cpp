#include "mkoszul/shuffle_tree.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "mkoszul/moduli.hpp"

namespace mkoszul {

ShuffleTree ShuffleTree::leaf(int label) {
    if (label < 1) throw std::invalid_argument("leaf labels are positive");
    ShuffleTree t;
    t.label_ = label;
    t.min_leaf_ = label;
    return t;
}

ShuffleTree ShuffleTree::node(std::vector<ShuffleTree> children) {
    if (children.size() < 2) throw std::invalid_argument("internal vertices have >= 2 children");
    for (size_t i = 0; i + 1 < children.size(); ++i)
        if (children[i].min_leaf() >= children[i + 1].min_leaf())
            throw std::invalid_argument("shuffle condition: children ordered by minimal leaf");
    ShuffleTree t;
    t.min_leaf_ = children.front().min_leaf();
    t.children_ = std::move(children);
    return t;
}

void ShuffleTree::collect_leaves(std::vector<int>& out) const {
    if (is_leaf()) {
        out.push_back(label_);
        return;
    }
    for (auto& c : children_) c.collect_leaves(out);
}

std::vector<int> ShuffleTree::leaves() const {
    std::vector<int> out;
    collect_leaves(out);
    return out;
}

SubsetMask ShuffleTree::leaf_set(int ambient_n) const {
    SubsetMask s(ambient_n);
    for (int e : leaves()) s.insert(e);
    return s;
}

int ShuffleTree::weight() const {
    if (is_leaf()) return 0;
    int w = arity() - 2;
    for (auto& c : children_) w += c.weight();
    return w;
}

std::string ShuffleTree::serialize() const {
    if (is_leaf()) return std::to_string(label_);
    std::string s = "[";
    for (size_t i = 0; i < children_.size(); ++i) {
        if (i) s += ",";
        s += children_[i].serialize();
    }
    return s + "]";
}

namespace {

ShuffleTree from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return ShuffleTree::leaf(j.get<int>());
    if (!j.is_array()) throw std::invalid_argument("tree nodes are integers or arrays");
    std::vector<ShuffleTree> children;
    for (auto& c : j) children.push_back(from_json(c));
    return ShuffleTree::node(std::move(children));
}

}  // namespace

ShuffleTree ShuffleTree::parse(const std::string& text) {
    return from_json(nlohmann::json::parse(text));
}

bool ShuffleTree::operator==(const ShuffleTree& o) const {
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return label_ == o.label_;
    return children_ == o.children_;
}

namespace {

bool binary_root(const ShuffleTree& t) { return !t.is_leaf() && t.arity() == 2; }

const ShuffleTree* find_violation(const ShuffleTree& t) {
    if (t.is_leaf()) return nullptr;
    for (int i = 0; i < t.arity(); ++i) {
        if (i + 1 < t.arity() && binary_root(t.children()[i])) return &t.children()[i];
        if (auto* v = find_violation(t.children()[i])) return v;
    }
    return nullptr;
}

}  // namespace

BasisMembership basis_membership(const ShuffleTree& t) {
    if (auto* v = find_violation(t)) return {false, v->serialize()};
    return {true, {}};
}

namespace {

using TreeList = std::vector<ShuffleTree>;

/// Ordered set partitions of `elems` (sorted ascending) with blocks ordered by
/// their minima; the callback receives the blocks.
void for_each_partition(const std::vector<int>& elems,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> blocks;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == elems.size()) {
            if (blocks.size() >= 2) fn(blocks);
            return;
        }
        const size_t existing = blocks.size();  // deeper levels append and pop their own blocks
        for (size_t bi = 0; bi < existing; ++bi) {
            blocks[bi].push_back(elems[i]);
            rec(i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({elems[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

class BasisEnumerator {
public:
    const TreeList& trees(const std::vector<int>& elems) {
        uint64_t key = 0;
        for (int e : elems) key |= uint64_t(1) << e;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        TreeList result;
        if (elems.size() == 1) {
            result.push_back(ShuffleTree::leaf(elems[0]));
        } else {
            for_each_partition(elems, [&](const std::vector<std::vector<int>>& blocks) {
                // options per slot; non-rightmost slots exclude binary roots
                std::vector<std::vector<const ShuffleTree*>> options(blocks.size());
                for (size_t b = 0; b < blocks.size(); ++b) {
                    for (const auto& t : trees(blocks[b])) {
                        if (b + 1 < blocks.size() && binary_root(t)) continue;
                        options[b].push_back(&t);
                    }
                }
                std::vector<const ShuffleTree*> pick(blocks.size());
                std::function<void(size_t)> assemble = [&](size_t b) {
                    if (b == blocks.size()) {
                        std::vector<ShuffleTree> children;
                        children.reserve(pick.size());
                        for (auto* p : pick) children.push_back(*p);
                        result.push_back(ShuffleTree::node(std::move(children)));
                        return;
                    }
                    for (auto* t : options[b]) {
                        pick[b] = t;
                        assemble(b + 1);
                    }
                };
                bool feasible = true;
                for (auto& o : options)
                    if (o.empty()) feasible = false;
                if (feasible) assemble(0);
            });
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    std::map<uint64_t, TreeList> memo_;
};

}  // namespace

std::vector<ShuffleTree> enumerate_basis(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("enumerate_basis supports 1 <= n <= 16");
    std::vector<int> elems(n);
    for (int i = 0; i < n; ++i) elems[i] = i + 1;
    BasisEnumerator en;
    std::vector<ShuffleTree> out = en.trees(elems);
    std::stable_sort(out.begin(), out.end(), [](const ShuffleTree& a, const ShuffleTree& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.serialize() < b.serialize();
    });
    return out;
}

CombDecomposition comb_decompose(const ShuffleTree& t) {
    if (t.is_leaf()) throw std::invalid_argument("comb_decompose needs an internal root");
    auto membership = basis_membership(t);
    if (!membership.ok)
        throw std::invalid_argument("comb_decompose requires a basis tree; violation at " +
                                    membership.violating);
    CombDecomposition d;
    d.k = t.arity();
    for (int i = 0; i + 1 < t.arity(); ++i) d.subtrees.push_back(t.children()[i]);
    // follow the spine of binary vertices hanging at the rightmost slot
    const ShuffleTree* cur = &t.children().back();
    while (binary_root(*cur)) {
        ++d.l;
        d.subtrees.push_back(cur->children()[0]);
        cur = &cur->children()[1];
    }
    d.subtrees.push_back(*cur);
    return d;
}

// ---------------------------------------------------------------------------

int SubsetMonomial::degree() const {
    int d = 0;
    for (auto& [s, e] : factors) d += e;
    return d;
}

void SubsetMonomial::multiply_by(const SubsetMask& s, int e) {
    for (auto& [t, te] : factors) {
        if (t == s) {
            te += e;
            return;
        }
    }
    factors.push_back({s, e});
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
}

SubsetMonomial SubsetMonomial::times(const SubsetMonomial& o) const {
    SubsetMonomial r = *this;
    for (auto& [s, e] : o.factors) r.multiply_by(s, e);
    return r;
}

std::string SubsetMonomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (auto& [t, e] : factors) {
        if (!s.empty()) s += "*";
        s += "X" + t.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

SubsetMonomial phi(const ShuffleTree& t, int ambient_n) {
    auto membership = basis_membership(t);
    if (!membership.ok)
        throw std::invalid_argument("phi requires a basis tree; violation at " + membership.violating);
    if (t.is_leaf()) return SubsetMonomial::one();

    CombDecomposition d = comb_decompose(t);
    SubsetMonomial m;
    for (auto& sub : d.subtrees) m = m.times(phi(sub, ambient_n));
    if (d.k >= 3) {
        SubsetMask all = t.leaf_set(ambient_n);
        for (int j = 3; j <= d.k; ++j) {
            int bound = d.subtrees[j + d.l - 1].min_leaf();
            SubsetMask s(ambient_n);
            for (int e : all.members())
                if (e <= bound) s.insert(e);
            m.multiply_by(s);
        }
    }
    return m;
}

SubsetMonomial f_transform(const SubsetMonomial& m, const SubsetMask& s) {
    SubsetMonomial out;
    SubsetMask strip = s.without(s.min());
    for (auto& [t, e] : m.factors) {
        if (t.disjoint_from(s)) {
            out.multiply_by(t, e);
            continue;
        }
        if (mi_complement_status(s, t) == MiStatus::not_mi)
            throw std::invalid_argument("f_transform: factor " + t.str() +
                                        " is neither disjoint from nor an MI-complement of " + s.str());
        SubsetMask image = t - strip;
        if (image.size() < 3)
            throw std::invalid_argument("f_transform: image of " + t.str() + " is too small");
        out.multiply_by(image, e);
    }
    return out;
}

namespace {

void validate_normal(const SubsetMonomial& m) {
    for (size_t a = 0; a < m.factors.size(); ++a) {
        if (m.factors[a].second > 1)
            throw std::invalid_argument("monomial has a non-normal quadratic divisor: square of " +
                                        m.factors[a].first.str());
        for (size_t b = a + 1; b < m.factors.size(); ++b)
            if (!classify_quadratic_pair(m.factors[a].first, m.factors[b].first).normal)
                throw std::invalid_argument("monomial has a non-normal quadratic divisor: " +
                                            m.factors[a].first.str() + "*" + m.factors[b].first.str());
    }
}

ShuffleTree graft_at_leaf(const ShuffleTree& host, int leaf_label, const ShuffleTree& graft) {
    if (host.is_leaf()) {
        if (host.label() == leaf_label) return graft;
        return host;
    }
    std::vector<ShuffleTree> children;
    children.reserve(host.arity());
    for (auto& c : host.children()) children.push_back(graft_at_leaf(c, leaf_label, graft));
    return ShuffleTree::node(std::move(children));
}

ShuffleTree psi_impl(const SubsetMonomial& m, const SubsetMask& ground);

/// Decomposable case: split over the connected components of the ground set
/// under the factor subsets (unused elements are singleton components), then
/// hang the component trees along a right comb of binary vertices.
ShuffleTree psi_decompose(const std::vector<SubsetMask>& components, const SubsetMonomial& m) {
    std::vector<ShuffleTree> parts;
    for (const auto& comp : components) {
        SubsetMonomial part;
        for (auto& [t, e] : m.factors)
            if (t.subset_of(comp)) part.multiply_by(t, e);
        parts.push_back(psi_impl(part, comp));
    }
    ShuffleTree tree = ShuffleTree::node({parts[parts.size() - 2], parts[parts.size() - 1]});
    for (int i = static_cast<int>(parts.size()) - 3; i >= 0; --i)
        tree = ShuffleTree::node({parts[i], tree});
    return tree;
}

ShuffleTree psi_impl(const SubsetMonomial& m, const SubsetMask& ground) {
    const int n = ground.ground_size();
    if (ground.empty()) throw std::invalid_argument("psi over an empty ground set");
    if (ground.size() == 1) {
        if (!m.is_one()) throw std::invalid_argument("nontrivial monomial over a singleton");
        return ShuffleTree::leaf(ground.min());
    }

    // connected components of the factor hypergraph, plus singletons
    std::vector<int> parent(n + 1);
    for (int e = 1; e <= n; ++e) parent[e] = e;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& [t, e] : m.factors) {
        if (!t.subset_of(ground)) throw std::invalid_argument("factor outside the ground set");
        int root = find(t.min());
        for (int x : t.members()) parent[find(x)] = root;
    }
    std::map<int, SubsetMask> comp_map;
    for (int e : ground.members()) {
        auto [it, fresh] = comp_map.try_emplace(find(e), SubsetMask(n));
        it->second.insert(e);
    }
    if (comp_map.size() >= 2) {
        std::vector<SubsetMask> components;
        for (auto& [root, comp] : comp_map) components.push_back(comp);
        std::sort(components.begin(), components.end(),
                  [](const SubsetMask& a, const SubsetMask& b) { return a.min() < b.min(); });
        return psi_decompose(components, m);
    }

    // indecomposable: the unique factor containing max(ground)
    const int top = ground.max();
    const SubsetMask* with_top = nullptr;
    for (auto& [t, e] : m.factors)
        if (t.contains(top)) {
            if (with_top || e > 1)
                throw std::invalid_argument("two factors contain the maximum; monomial not normal");
            with_top = &t;
        }
    if (!with_top) throw std::invalid_argument("indecomposable monomial without a top factor");
    SubsetMask s = *with_top;

    if (s == ground) {
        // m = m' * X_ground: extend the comb of psi(m') by one root slot
        SubsetMonomial rest;
        for (auto& [t, e] : m.factors) {
            if (t == s) {
                if (e > 1) rest.multiply_by(t, e - 1);
            } else {
                rest.multiply_by(t, e);
            }
        }
        ShuffleTree inner = psi_impl(rest, boundary(ground));
        CombDecomposition d = comb_decompose(inner);
        std::vector<ShuffleTree> slots = d.subtrees;
        slots.push_back(ShuffleTree::leaf(top));
        // rebuild tau_{k+1, l}: root children are slots 1..k+1 with the spine
        // of l binary vertices at the last root slot
        int k = d.k + 1;
        int l = d.l;
        ShuffleTree tail = slots.back();
        for (int i = l; i >= 1; --i) tail = ShuffleTree::node({slots[k + i - 2], tail});
        std::vector<ShuffleTree> root_children(slots.begin(), slots.begin() + (k - 1));
        root_children.push_back(tail);
        return ShuffleTree::node(std::move(root_children));
    }

    // proper top factor: split off the generators inside S, transform the rest
    SubsetMonomial inside, outside;
    for (auto& [t, e] : m.factors)
        (t.subset_of(s) ? inside : outside).multiply_by(t, e);
    SubsetMonomial transformed = f_transform(outside, s);
    SubsetMask reduced_ground = (ground - s).with(s.min());
    ShuffleTree host = psi_impl(transformed, reduced_ground);
    ShuffleTree part = psi_impl(inside, s);
    return graft_at_leaf(host, s.min(), part);
}

}  // namespace

ShuffleTree psi(const SubsetMonomial& m, const SubsetMask& ground) {
    validate_normal(m);
    return psi_impl(m, ground);
}

}  // namespace mkoszul
