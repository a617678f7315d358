#ifndef MKOSZUL_SUBSETS_HPP
#define MKOSZUL_SUBSETS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkoszul {

/// Finite ordered ground set {1,...,n}, n >= 1.
struct GroundSet {
    int n;
    explicit GroundSet(int n_) : n(n_) {
        if (n < 1 || n > 64) throw std::invalid_argument("ground set size out of range");
    }
};

/// A subset of {1,...,n} stored as a bit pattern (bit i-1 <-> element i).
/// All binary operations require matching ground sizes.
class SubsetMask {
public:
    SubsetMask() : n_(1), bits_(0) {}
    explicit SubsetMask(int n, uint64_t bits = 0) : n_(n), bits_(bits) {
        check_ground(n);
        if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("subset exceeds ground set");
    }
    SubsetMask(int n, std::initializer_list<int> elems) : n_(n), bits_(0) {
        check_ground(n);
        for (int e : elems) insert(e);
    }
    static SubsetMask full(int n) {
        check_ground(n);
        return SubsetMask(n, n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1));
    }

    int ground_size() const { return n_; }
    uint64_t bits() const { return bits_; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int e) const { return e >= 1 && e <= n_ && (bits_ >> (e - 1)) & 1; }

    void insert(int e) {
        if (e < 1 || e > n_) throw std::invalid_argument("element outside ground set");
        bits_ |= uint64_t(1) << (e - 1);
    }

    /// Smallest element; subset must be non-empty.
    int min() const {
        require_nonempty();
        return __builtin_ctzll(bits_) + 1;
    }
    /// Largest element; subset must be non-empty.
    int max() const {
        require_nonempty();
        return 64 - __builtin_clzll(bits_);
    }

    SubsetMask with(int e) const {
        SubsetMask r = *this;
        r.insert(e);
        return r;
    }
    SubsetMask without(int e) const {
        SubsetMask r = *this;
        if (e >= 1 && e <= n_) r.bits_ &= ~(uint64_t(1) << (e - 1));
        return r;
    }

    SubsetMask operator|(const SubsetMask& o) const { return combined(o, bits_ | o.bits_); }
    SubsetMask operator&(const SubsetMask& o) const { return combined(o, bits_ & o.bits_); }
    SubsetMask operator-(const SubsetMask& o) const { return combined(o, bits_ & ~o.bits_); }

    bool subset_of(const SubsetMask& o) const {
        require_same_ground(o);
        return (bits_ & ~o.bits_) == 0;
    }
    bool disjoint_from(const SubsetMask& o) const {
        require_same_ground(o);
        return (bits_ & o.bits_) == 0;
    }
    bool comparable_with(const SubsetMask& o) const {
        return subset_of(o) || o.subset_of(*this);
    }

    bool operator==(const SubsetMask& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int e : members()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    void require_same_ground(const SubsetMask& o) const {
        if (n_ != o.n_) throw std::invalid_argument("mismatched ground sets");
    }

private:
    static void check_ground(int n) {
        if (n < 1 || n > 64) throw std::invalid_argument("ground set size out of range");
    }
    void require_nonempty() const {
        if (empty()) throw std::invalid_argument("empty subset has no extreme element");
    }
    SubsetMask combined(const SubsetMask& o, uint64_t bits) const {
        require_same_ground(o);
        return SubsetMask(n_, bits);
    }

    int n_;
    uint64_t bits_;
};

/// Removes from S its maximal element. Errors on the empty set.
SubsetMask boundary(const SubsetMask& s);

/// The partial order on 2^{1..n} generated by the covering steps
///   I -> I \ {a}  (a in I, a != max I)   and   I -> J with I = boundary(J).
/// Returns true iff I precedes-or-equals J in the transitive closure.
bool exotic_leq(const SubsetMask& i, const SubsetMask& j);

/// Canonical linear extension of exotic_leq: compare by max ascending
/// (empty set first), then cardinality descending, then lexicographically
/// on sorted member lists.
std::strong_ordering canonical_compare(const SubsetMask& i, const SubsetMask& j);

inline bool canonical_less(const SubsetMask& i, const SubsetMask& j) {
    return canonical_compare(i, j) == std::strong_ordering::less;
}

enum class MiStatus { not_mi, mi_inessential, mi_essential };

/// Classifies T relative to S (both of size >= 3 over the same ground set):
/// T is an MI-complement of S when S and T intersect, T is an initial interval
/// of S∪T, and T is the shortest initial interval U of S∪T with |U| >= 3,
/// S∩U nonempty and S∪U = S∪T. Essential when additionally |T \ S| > 1.
MiStatus mi_complement_status(const SubsetMask& s, const SubsetMask& t);

/// True iff T = { x in I : x <= max(T) }, i.e. T is an initial interval of I.
/// T must be a subset of I; the empty set counts as an initial interval.
bool is_initial_interval(const SubsetMask& t, const SubsetMask& i);

}  // namespace mkoszul

#endif
