#include "mkoszul/subsets.hpp"

namespace mkoszul {

SubsetMask boundary(const SubsetMask& s) {
    if (s.empty()) throw std::invalid_argument("boundary of empty set");
    return s.without(s.max());
}

// Closed form for the transitive closure: the maximum never decreases along a
// step, so I <= J requires max(I) <= max(J). With equal maxima only removals
// of non-maximal elements are available, forcing max(I) in J and J inside I.
// With max(J) > max(I), elements below max(I) can never be (re)introduced, and
// everything else is reachable: shrink I to (J ∩ [1,max I)) ∪ {max I}, append
// the elements of J above max(I) in increasing order, drop max(I) if unneeded.
bool exotic_leq(const SubsetMask& i, const SubsetMask& j) {
    i.require_same_ground(j);
    if (i == j) return true;
    const int mi = i.empty() ? 0 : i.max();
    const int mj = j.empty() ? 0 : j.max();
    if (mj < mi) return false;
    if (mj == mi) return j.subset_of(i) && (mi == 0 || j.contains(mi));
    // mj > mi: every element of J below max(I) must already be in I.
    for (int e : j.members()) {
        if (e >= mi) break;
        if (!i.contains(e)) return false;
    }
    return true;
}

std::strong_ordering canonical_compare(const SubsetMask& i, const SubsetMask& j) {
    i.require_same_ground(j);
    const int mi = i.empty() ? 0 : i.max();
    const int mj = j.empty() ? 0 : j.max();
    if (mi != mj) return mi <=> mj;
    if (i.size() != j.size()) return j.size() <=> i.size();  // larger set first
    if (i == j) return std::strong_ordering::equal;
    // Equal max and size: the set containing the smallest differing element
    // is lexicographically smaller as a sorted list.
    uint64_t diff = i.bits() ^ j.bits();
    uint64_t low = diff & (~diff + 1);
    return (i.bits() & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool is_initial_interval(const SubsetMask& t, const SubsetMask& i) {
    if (!t.subset_of(i)) throw std::invalid_argument("initial interval test requires T subset of I");
    if (t.empty()) return true;
    const int m = t.max();
    for (int e : i.members()) {
        if (e > m) break;
        if (!t.contains(e)) return false;
    }
    return true;
}

MiStatus mi_complement_status(const SubsetMask& s, const SubsetMask& t) {
    s.require_same_ground(t);
    if (s.size() < 3 || t.size() < 3) throw std::invalid_argument("mi_complement_status requires |S|,|T| >= 3");
    if (s.disjoint_from(t)) return MiStatus::not_mi;
    const SubsetMask i = s | t;
    if (t == i) return MiStatus::not_mi;  // only proper initial intervals qualify
    if (!is_initial_interval(t, i)) return MiStatus::not_mi;
    // Walk boundary(I), boundary^2(I), ... while they still qualify (size >= 3,
    // meet S, union with S unchanged); the last one is shortest. T lies on this
    // chain, so it is nonempty.
    SubsetMask u = boundary(i);
    SubsetMask best = u;
    while (u.size() >= 3 && !u.disjoint_from(s) && (s | u) == i) {
        best = u;
        u = boundary(u);
    }
    if (!(t == best)) return MiStatus::not_mi;
    return (t - s).size() > 1 ? MiStatus::mi_essential : MiStatus::mi_inessential;
}

}  // namespace mkoszul
