#include "mkoszul/report.hpp"

#include <fstream>
#include <sstream>

#include "mkoszul/rank_oracle.hpp"

namespace mkoszul::report {

namespace {

void check_n(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("--n must be between 1 and 8");
}

Json variables_json(const ModuliRing& ring) {
    Json vars = Json::array();
    for (auto& s : ring.variables()) vars.push_back(subset_json(s));
    return vars;
}

long coeff_long(const Int& c) {
    if (!c.fits_slong_p()) throw std::runtime_error("coefficient out of long range");
    return c.get_si();
}

std::vector<long> oracle_dims_for(const ModuliRing& ring, int upto) {
    std::vector<RatPolynomial> raw;
    for (auto& r : ring.raw_relations()) raw.push_back(to_rational(r));
    return graded_quotient_dims(raw, ring.table().size(), upto);
}

}  // namespace

Json subset_json(const SubsetMask& s) {
    Json j = Json::array();
    for (int e : s.members()) j.push_back(e);
    return j;
}

Json monomial_json(const Monomial& m) {
    Json j = Json::array();
    for (auto& [v, e] : m.exponents()) j.push_back(Json::array({v, e}));
    return j;
}

Json polynomial_json(const IntPolynomial& p) {
    Json j = Json::array();
    for (auto& [m, c] : p.terms()) j.push_back(Json::array({monomial_json(m), coeff_long(c)}));
    return j;
}

Json relations_report(int n) {
    check_n(n);
    ModuliRing ring(n);
    Json j;
    j["command"] = "relations";
    j["n"] = n;
    j["variables"] = variables_json(ring);
    Json rels = Json::array();
    for (auto& r : ring.reduced_relations()) {
        Json e;
        e["type"] = relation_type_name(r.type);
        e["S"] = subset_json(r.S);
        if (r.T) e["T"] = subset_json(*r.T);
        if (r.U) e["union"] = subset_json(*r.U);
        if (r.s) e["s"] = *r.s;
        if (r.p) e["p"] = *r.p;
        e["polynomial"] = polynomial_json(r.poly);
        e["leading_monomial"] = monomial_json(r.poly.leading_monomial(ring.order()));
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    Json counts;
    for (auto& r : ring.reduced_relations()) {
        std::string t = relation_type_name(r.type);
        counts[t] = counts.contains(t) ? counts[t].get<int>() + 1 : 1;
    }
    j["family_counts"] = std::move(counts);
    j["raw_relation_count"] = ring.raw_relations().size();
    return j;
}

Json gb_report(int n, int jobs, bool serial) {
    check_n(n);
    ModuliRing ring(n);
    GroebnerOptions opt;
    opt.jobs = jobs;
    opt.parallel = !serial;
    auto hv = ring.hilbert_vector();
    opt.normal_degree_cap = static_cast<int>(hv.size());
    opt.normal_counter = [&](int d) {
        return d < static_cast<int>(hv.size()) ? hv[d] : 0L;
    };
    if (n <= 5) opt.oracle_dims = oracle_dims_for(ring, static_cast<int>(hv.size()));

    auto cert = serial ? buchberger_verify_serial(ring.reduced_polynomials(), ring.order(), opt)
                       : buchberger_verify(ring.reduced_polynomials(), ring.order(), opt);
    Json j;
    j["command"] = "gb-check";
    j["n"] = n;
    j["outcome"] = cert.verified ? "verified" : "failed";
    j["relation_count"] = cert.relations.size();
    j["spairs_total"] = cert.spairs_total;
    j["spairs_skipped_coprime"] = cert.spairs_skipped_coprime;
    j["spairs_reduced"] = cert.spairs_reduced;
    j["normal_counts"] = cert.normal_counts;
    j["counting_checked"] = cert.counting_checked;
    j["counting_match"] = cert.counting_checked ? Json(cert.counting_match) : Json(nullptr);
    j["variables"] = variables_json(ring);
    Json rels = Json::array();
    for (auto& r : cert.relations) rels.push_back(polynomial_json(r));
    j["relations"] = std::move(rels);
    Json leads = Json::array();
    for (auto& m : cert.leading) leads.push_back(monomial_json(m));
    j["leading_monomials"] = std::move(leads);
    if (cert.first_failure) {
        Json f;
        f["i"] = cert.first_failure->i;
        f["j"] = cert.first_failure->j;
        f["normal_form"] = polynomial_json(cert.first_failure->normal_form);
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

Json hilbert_report(int n) {
    check_n(n);
    ModuliRing ring(n);
    Json j;
    j["command"] = "hilbert";
    j["n"] = n;
    j["hilbert_vector"] = ring.hilbert_vector();
    return j;
}

Json normal_report(int n, int degree) {
    check_n(n);
    if (degree < 0 || degree > 12) throw std::invalid_argument("--degree must be between 0 and 12");
    ModuliRing ring(n);
    Json j;
    j["command"] = "normal";
    j["n"] = n;
    j["degree"] = degree;
    j["variables"] = variables_json(ring);
    Json list = Json::array();
    if (ring.table().size() == 0) {
        if (degree == 0) list.push_back(Json::array());
    } else {
        for (auto& m : normal_monomials(ring.leading_monomials(), degree, ring.table().size()))
            list.push_back(monomial_json(m));
    }
    j["count"] = list.size();
    j["normal_monomials"] = std::move(list);
    return j;
}

Json trees_report(int n) {
    check_n(n);
    Json j;
    j["command"] = "trees";
    j["n"] = n;
    auto basis = enumerate_basis(n);
    j["count"] = basis.size();
    Json list = Json::array();
    for (auto& t : basis) {
        Json e;
        e["tree"] = Json::parse(t.serialize());
        e["weight"] = t.weight();
        list.push_back(std::move(e));
    }
    j["trees"] = std::move(list);
    return j;
}

Json phi_report(int n, const std::string& tree_text) {
    check_n(n);
    ShuffleTree t = ShuffleTree::parse(tree_text);
    auto leaves = t.leaves();
    std::vector<int> sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i + 1) throw std::invalid_argument("tree leaves must be exactly 1..n");
    if (static_cast<int>(sorted.size()) != n) throw std::invalid_argument("tree has a different leaf count than --n");
    SubsetMonomial m = phi(t, n);
    Json j;
    j["command"] = "phi";
    j["n"] = n;
    j["tree"] = Json::parse(t.serialize());
    Json factors = Json::array();
    for (auto& [s, e] : m.factors)
        for (int k = 0; k < e; ++k) factors.push_back(subset_json(s));
    j["monomial"] = std::move(factors);
    j["weight"] = m.degree();
    return j;
}

Json psi_report(int n, const std::string& monomial_text) {
    check_n(n);
    Json input = Json::parse(monomial_text);
    if (!input.is_array()) throw std::invalid_argument("monomial input is a JSON list of subsets");
    SubsetMonomial m;
    for (auto& subset : input) {
        SubsetMask s(n);
        for (auto& e : subset) s.insert(e.get<int>());
        if (s.size() < 3) throw std::invalid_argument("generator subsets have at least 3 elements");
        m.multiply_by(s);
    }
    ShuffleTree t = psi(m, SubsetMask::full(n));
    Json j;
    j["command"] = "psi";
    j["n"] = n;
    Json factors = Json::array();
    for (auto& [s, e] : m.factors)
        for (int k = 0; k < e; ++k) factors.push_back(subset_json(s));
    j["monomial"] = std::move(factors);
    j["tree"] = Json::parse(t.serialize());
    return j;
}

Json dual_report(int n) {
    check_n(n);
    ModuliRing ring(n);
    auto dual = quadratic_dual(ring_presentation(ring));
    Json j;
    j["command"] = "dual";
    j["n"] = n;
    j["generators"] = dual.generators;
    j["odd_generators"] = dual.odd_generators;
    j["kind"] = "graded_commutative";
    j["relation_space_dimension"] = dual.relations.size();
    Json rels = Json::array();
    for (auto& vec : dual.relations) {
        Json v = Json::array();
        for (auto& [id, q] : vec) {
            int hi = 0;
            while ((hi + 1) * (hi + 2) / 2 <= id) ++hi;
            int lo = id - hi * (hi + 1) / 2;
            v.push_back(Json::array({lo, hi, coeff_long(Int(q.get_num()))}));
        }
        rels.push_back(std::move(v));
    }
    j["relations"] = std::move(rels);
    return j;
}

Json lie_check_report(int n) {
    check_n(n);
    auto rep = verify_dual_presentation(ModuliRing(n));
    Json j;
    j["command"] = "lie-check";
    j["n"] = n;
    j["pass"] = rep.pass;
    j["orthogonal"] = rep.orthogonal;
    j["independent"] = rep.independent;
    j["count_matches"] = rep.count_matches;
    j["family_counts"] =
        Json{{"disjoint_pairs", rep.disjoint_count},
             {"cover_sums", rep.cover_count},
             {"interval_brackets", rep.interval_count}};
    j["relation_count"] = rep.relation_count;
    j["annihilator_dimension"] = rep.annihilator_dim;
    if (rep.first_failing_pairing) {
        j["first_failing_pairing"] =
            Json::array({rep.first_failing_pairing->first, rep.first_failing_pairing->second});
    } else {
        j["first_failing_pairing"] = nullptr;
    }
    return j;
}

Json homotopy_report(int n, int order) {
    check_n(n);
    if (order < 1 || order > 24) throw std::invalid_argument("--order must be between 1 and 24");
    ModuliRing ring(n);
    auto series = homotopy_rank_series(ring, order);
    Json j;
    j["command"] = "homotopy-ranks";
    j["n"] = n;
    j["order"] = order;
    Json ranks = Json::array();
    for (int k = 1; k <= order; ++k) ranks.push_back(series.c[k].get_num().get_si());
    j["ranks"] = std::move(ranks);
    j["rank_of"] = "homotopy group in degree k+1, for k = 1..order";
    return j;
}

Json hh0_report(int n, int64_t ell, int degree) {
    check_n(n);
    if (degree < 0 || degree > 12) throw std::invalid_argument("--degree must be between 0 and 12");
    ModuliRing ring(n);
    auto dims = commutator_quotient_dims(ring, ell, degree);
    Json j;
    j["command"] = "hh0";
    j["n"] = n;
    j["prime"] = ell;
    j["max_degree"] = degree;
    j["dimensions"] = dims;
    return j;
}

Json nonvanishing_report_json(int n) {
    check_n(n);
    if (n < 3) throw std::invalid_argument("nonvanishing requires --n >= 3");
    ModuliRing ring(n);
    auto rep = nonvanishing_checks(ring);
    Json j;
    j["command"] = "nonvanishing";
    j["n"] = n;
    j["all_divisor_squares_nonzero"] = rep.all_squares_nonzero;
    j["top_powers_nonzero_below_top"] = rep.top_powers_nonzero_below;
    Json squares = Json::array();
    for (auto& sq : rep.divisor_squares) {
        squares.push_back(Json{{"class", subset_json(sq.rep)}, {"square_nonzero", sq.nonzero}});
    }
    j["divisor_squares"] = std::move(squares);
    Json powers = Json::array();
    for (auto& [k, nonzero] : rep.top_powers)
        powers.push_back(Json{{"k", k}, {"nonzero", nonzero}});
    j["top_generator_powers"] = std::move(powers);
    // expected nonvanishing: squares for n >= 4, powers below the top degree
    j["pass"] = (n == 3 || rep.all_squares_nonzero) && rep.top_powers_nonzero_below;
    return j;
}

Json toric_report_json(const std::string& fan_file) {
    std::ifstream in(fan_file);
    if (!in.good()) throw std::invalid_argument("cannot open fan file: " + fan_file);
    std::stringstream ss;
    ss << in.rdbuf();
    Fan fan = fan_from_json_text(ss.str());
    auto rep = toric_koszul_check(fan);
    Json j;
    j["command"] = "toric";
    j["rays"] = fan.rays.size();
    j["dim"] = fan.dim;
    j["flag"] = rep.flag;
    j["witness"] = rep.witness.empty() ? Json(nullptr) : Json(rep.witness);
    j["quadratic"] = rep.quadratic;
    j["verdict"] = rep.verdict;
    j["method"] = rep.method.empty() ? Json(nullptr) : Json(rep.method);
    j["koszul_certified"] = rep.koszul_certified;
    j["hilbert_vector"] = rep.hilbert;
    j["palindromic"] = rep.palindromic;
    j["gb_verified"] = rep.gb_verified;
    j["counting_match"] = rep.counting_match;
    j["face_ring_gb_verified"] = rep.face_ring_gb_verified;
    j["regular_sequence_match"] = rep.regular_sequence_match;
    Json kept = Json::array();
    for (int r : rep.kept_rays) kept.push_back(r + 1);
    j["kept_rays"] = std::move(kept);
    return j;
}

bool report_verified(const Json& j) {
    std::string cmd = j.value("command", "");
    if (cmd == "gb-check") return j["outcome"] == "verified";
    if (cmd == "lie-check") return j["pass"].get<bool>();
    if (cmd == "nonvanishing") return j["pass"].get<bool>();
    if (cmd == "toric") return j["verdict"] == "koszul";
    return true;
}

std::string to_csv(const Json& j) {
    std::ostringstream out;
    std::string cmd = j.value("command", "");
    auto row_of = [&](const Json& arr) {
        std::string line;
        for (auto& x : arr) line += (line.empty() ? "" : ",") + x.dump();
        return line;
    };
    if (cmd == "hilbert") {
        out << "degree,dimension\n";
        int d = 0;
        for (auto& x : j["hilbert_vector"]) out << d++ << "," << x.dump() << "\n";
    } else if (cmd == "homotopy-ranks") {
        out << "k,rank\n";
        int k = 1;
        for (auto& x : j["ranks"]) out << k++ << "," << x.dump() << "\n";
    } else if (cmd == "hh0") {
        out << "degree,dimension\n";
        int d = 0;
        for (auto& x : j["dimensions"]) out << d++ << "," << x.dump() << "\n";
    } else if (cmd == "toric") {
        out << "degree,dimension\n";
        int d = 0;
        for (auto& x : j["hilbert_vector"]) out << d++ << "," << x.dump() << "\n";
    } else if (cmd == "normal") {
        out << "monomial\n";
        for (auto& m : j["normal_monomials"]) out << row_of(Json::array({m})) << "\n";
    } else {
        throw std::invalid_argument("csv output is available for hilbert, homotopy-ranks, hh0, toric, normal");
    }
    return out.str();
}

std::string to_pretty(const Json& j) {
    std::ostringstream out;
    std::string cmd = j.value("command", "");
    if (cmd == "hilbert") {
        bool first = true;
        for (auto& x : j["hilbert_vector"]) {
            out << (first ? "" : " ") << x.dump();
            first = false;
        }
        out << "\n";
        return out.str();
    }
    if (cmd == "gb-check") {
        out << "outcome: " << j["outcome"].get<std::string>() << "\n";
        out << "relations: " << j["relation_count"] << "\n";
        out << "s-pairs: " << j["spairs_total"] << " total, " << j["spairs_skipped_coprime"]
            << " skipped (coprime), " << j["spairs_reduced"] << " reduced\n";
        out << "normal counts:";
        for (auto& x : j["normal_counts"]) out << " " << x.dump();
        out << "\n";
        if (!j["counting_match"].is_null())
            out << "counting criterion: " << (j["counting_match"].get<bool>() ? "match" : "MISMATCH")
                << "\n";
        return out.str();
    }
    if (cmd == "toric") {
        out << "verdict: " << j["verdict"].get<std::string>() << "\n";
        if (!j["witness"].is_null()) out << "witness: " << j["witness"].dump() << "\n";
        out << "hilbert:";
        for (auto& x : j["hilbert_vector"]) out << " " << x.dump();
        out << "\n";
        return out.str();
    }
    return j.dump(2) + "\n";
}

}  // namespace mkoszul::report
