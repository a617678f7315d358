#ifndef MKOSZUL_TORIC_HPP
#define MKOSZUL_TORIC_HPP

#include <string>

#include "mkoszul/groebner.hpp"
#include "mkoszul/polynomial.hpp"

namespace mkoszul {

/// Rational polyhedral fan given by rays (primitive integer vectors) and
/// maximal cones (1-based ray index lists in the JSON surface, 0-based here).
struct Fan {
    int dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<int>> cones;
};

Fan fan_from_json_text(const std::string& text);

/// Smoothness (every maximal cone is a lattice basis), simpliciality and
/// completeness (every facet shared by exactly two maximal cones, connected
/// adjacency). Throws std::runtime_error with a diagnostic on failure.
void validate_fan(const Fan& fan);

struct FlagVerdict {
    bool flag = false;
    std::vector<int> witness;  // 1-based rays of a minimal empty clique
};

/// True iff every pairwise-compatible ray set spans a cone of the underlying
/// simplicial complex; otherwise reports a smallest clique that is not a face.
FlagVerdict is_flag(const Fan& fan);

struct DanilovPresentation {
    int ray_count = 0;
    std::vector<std::vector<Int>> linear;            // one row of ray coordinates per dimension
    std::vector<std::vector<int>> nonfaces;          // minimal non-faces, 0-based, sorted
    bool quadratic = false;                          // all Stanley-Reisner generators quadratic
    std::vector<long> rank_vector;                   // oracle quotient dimensions, through the top degree
};

DanilovPresentation danilov_presentation(const Fan& fan);

struct ToricReport {
    bool flag = false;
    std::vector<int> witness;
    bool quadratic = false;
    std::vector<int> kept_rays;                      // variable order after elimination, 0-based
    bool gb_attempted = false;
    bool gb_monic = false;
    bool gb_verified = false;
    bool counting_match = false;
    std::vector<long> hilbert;                       // quotient dimensions through the top degree
    std::vector<long> oracle_dims;                   // order-free counting on the eliminated system
    bool face_ring_gb_verified = false;              // monomial quadrics of the face ring
    bool regular_sequence_match = false;             // Hilbert identity (1-t)^d H_face = H_quotient
    bool palindromic = false;
    bool koszul_certified = false;
    std::string method;                              // "quadratic_gb" | "face_ring_regular_sequence" | ""
    std::string verdict;                             // "koszul" | "not_koszul" | "flag_uncertified"
};

/// Flag check, elimination of the linear relations by unit pivots, Gauss
/// inter-reduction and Groebner verification of the substituted quadrics.
/// When that particular order does not admit a quadratic basis, falls back to
/// the order-free route: the face ring's monomial quadrics (always a Groebner
/// basis) plus the exact Hilbert identity certifying that the linear forms
/// act as a regular sequence. Non-flag fans are reported not Koszul with the
/// witness.
ToricReport toric_koszul_check(const Fan& fan);

}  // namespace mkoszul

#endif
