#ifndef MKOSZUL_REPORT_HPP
#define MKOSZUL_REPORT_HPP

#include <string>

#include "json.hpp"
#include "mkoszul/duality.hpp"
#include "mkoszul/moduli.hpp"
#include "mkoszul/shuffle_tree.hpp"
#include "mkoszul/toric.hpp"

namespace mkoszul::report {

using Json = nlohmann::ordered_json;

Json subset_json(const SubsetMask& s);
Json monomial_json(const Monomial& m);
Json polynomial_json(const IntPolynomial& p);

/// The tagged Gauss-reduced relation families of the ring.
Json relations_report(int n);

/// Groebner certificate for the reduced relations, with the independent
/// counting criterion consulted for n <= 5.
Json gb_report(int n, int jobs = 0, bool serial = false);

Json hilbert_report(int n);
Json normal_report(int n, int degree);
Json trees_report(int n);

/// tree (nested-list text) -> monomial
Json phi_report(int n, const std::string& tree_text);
/// monomial (JSON list of subsets) -> tree
Json psi_report(int n, const std::string& monomial_text);

Json dual_report(int n);
Json lie_check_report(int n);
Json homotopy_report(int n, int order);
Json hh0_report(int n, int64_t ell, int degree);
Json nonvanishing_report_json(int n);
Json toric_report_json(const std::string& fan_file);

/// Whether the report signals a verification success (drives the exit code).
bool report_verified(const Json& j);

std::string to_csv(const Json& j);
std::string to_pretty(const Json& j);

}  // namespace mkoszul::report

#endif
