#include "mkoszul/groebner.hpp"

#include <omp.h>

#include <algorithm>
#include <tuple>

namespace mkoszul {

namespace {

uint64_t pack_pair(int lo, int hi) { return (uint64_t(uint32_t(lo)) << 32) | uint32_t(hi); }

}  // namespace

LeadIndex::LeadIndex(std::vector<Monomial> leads) : leads_(std::move(leads)) {
    all_quadratic_ = true;
    for (auto& m : leads_)
        if (m.degree() != 2) all_quadratic_ = false;
    if (!all_quadratic_) return;
    for (int i = 0; i < static_cast<int>(leads_.size()); ++i) {
        const auto& e = leads_[i].exponents();
        int lo, hi;
        if (e.size() == 1) {
            lo = hi = e[0].first;
        } else {
            lo = e[0].first;
            hi = e[1].first;
        }
        auto [it, inserted] = pair_index_.try_emplace(pack_pair(lo, hi), i);
        if (!inserted && i < it->second) it->second = i;
    }
}

int LeadIndex::find_divisor(const Monomial& m) const {
    if (all_quadratic_) {
        if (m.degree() < 2) return -1;
        const auto& e = m.exponents();
        int best = -1;
        for (size_t a = 0; a < e.size(); ++a) {
            if (e[a].second >= 2) {
                auto it = pair_index_.find(pack_pair(e[a].first, e[a].first));
                if (it != pair_index_.end() && (best < 0 || it->second < best)) best = it->second;
            }
            for (size_t b = a + 1; b < e.size(); ++b) {
                auto it = pair_index_.find(pack_pair(e[a].first, e[b].first));
                if (it != pair_index_.end() && (best < 0 || it->second < best)) best = it->second;
            }
        }
        return best;
    }
    for (int i = 0; i < static_cast<int>(leads_.size()); ++i)
        if (leads_[i].divides(m)) return i;
    return -1;
}

namespace {

struct SPair {
    int deg;
    int i, j;
    bool operator<(const SPair& o) const {
        return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
    }
};

std::vector<SPair> spair_queue(const std::vector<Monomial>& leads, long& skipped) {
    std::vector<SPair> queue;
    skipped = 0;
    const int n = static_cast<int>(leads.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Monomial l = Monomial::lcm(leads[i], leads[j]);
            if (l.degree() == leads[i].degree() + leads[j].degree()) {
                ++skipped;  // coprime leading monomials: S-pair reduces to zero
                continue;
            }
            queue.push_back({l.degree(), i, j});
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

GroebnerCertificate verify_impl(const std::vector<IntPolynomial>& basis,
                                const GradedLexOrder& order, const GroebnerOptions& options,
                                bool parallel) {
    GroebnerCertificate cert;
    cert.relations = basis;
    cert.leading.reserve(basis.size());
    for (auto& g : basis) {
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in basis");
        if (!g.is_monic(order)) throw std::invalid_argument("buchberger_verify requires a monic basis");
        if (!g.is_homogeneous()) throw std::invalid_argument("buchberger_verify requires homogeneous relations");
        cert.leading.push_back(g.leading_monomial(order));
    }
    LeadIndex index(cert.leading);

    auto queue = spair_queue(cert.leading, cert.spairs_skipped_coprime);
    cert.spairs_total = static_cast<long>(queue.size()) + cert.spairs_skipped_coprime;
    cert.spairs_reduced = static_cast<long>(queue.size());

    long first_fail = -1;
    IntPolynomial fail_form;

    if (parallel) {
        if (options.jobs > 0) omp_set_num_threads(options.jobs);
#pragma omp parallel
        {
            long local_fail = -1;
            IntPolynomial local_form;
#pragma omp for schedule(dynamic, 16)
            for (long k = 0; k < static_cast<long>(queue.size()); ++k) {
                if (local_fail >= 0 && k > local_fail) continue;  // cannot improve this thread's minimum
                IntPolynomial s = s_polynomial(basis[queue[k].i], basis[queue[k].j], order);
                IntPolynomial nf = reduce(s, basis, order, index);
                if (!nf.is_zero()) {
                    local_fail = k;
                    local_form = std::move(nf);
                }
            }
#pragma omp critical
            {
                if (local_fail >= 0 && (first_fail < 0 || local_fail < first_fail)) {
                    first_fail = local_fail;
                    fail_form = std::move(local_form);
                }
            }
        }
    } else {
        for (long k = 0; k < static_cast<long>(queue.size()); ++k) {
            IntPolynomial s = s_polynomial(basis[queue[k].i], basis[queue[k].j], order);
            IntPolynomial nf = reduce(s, basis, order, index);
            if (!nf.is_zero()) {
                first_fail = k;
                fail_form = std::move(nf);
                break;
            }
        }
    }

    if (first_fail >= 0) {
        cert.first_failure = GroebnerFailure{queue[first_fail].i, queue[first_fail].j, fail_form};
    }

    auto count = [&](int d) {
        return options.normal_counter ? options.normal_counter(d)
                                      : count_normal_monomials(cert.leading, d, order.var_count());
    };
    for (int d = 0; d <= options.normal_degree_cap; ++d) {
        long c = count(d);
        cert.normal_counts.push_back(c);
        if (c == 0) break;  // once a whole degree level is blocked it stays blocked
    }

    bool counting_ok = true;
    if (options.oracle_dims) {
        cert.counting_checked = true;
        const auto& dims = *options.oracle_dims;
        size_t upto = std::min(dims.size(), cert.normal_counts.size());
        for (size_t d = 0; d < upto; ++d)
            if (dims[d] != cert.normal_counts[d]) counting_ok = false;
        cert.counting_match = counting_ok;
    }

    cert.verified = (first_fail < 0) && (!cert.counting_checked || cert.counting_match);
    return cert;
}

}  // namespace

GroebnerCertificate buchberger_verify(const std::vector<IntPolynomial>& basis,
                                      const GradedLexOrder& order,
                                      const GroebnerOptions& options) {
    return verify_impl(basis, order, options, options.parallel);
}

GroebnerCertificate buchberger_verify_serial(const std::vector<IntPolynomial>& basis,
                                             const GradedLexOrder& order,
                                             const GroebnerOptions& options) {
    return verify_impl(basis, order, options, false);
}

namespace {

void enumerate_degree(int var_count, int degree, std::vector<int>& tuple,
                      const std::function<void(const std::vector<int>&)>& fn, int from) {
    if (degree == 0) {
        fn(tuple);
        return;
    }
    for (int v = from; v < var_count; ++v) {
        tuple.push_back(v);
        enumerate_degree(var_count, degree - 1, tuple, fn, v);
        tuple.pop_back();
    }
}

Monomial monomial_from_tuple(const std::vector<int>& tuple) {
    Monomial::Exps exps;
    for (int v : tuple) {
        if (!exps.empty() && exps.back().first == v)
            exps.back().second++;
        else
            exps.push_back({v, 1});
    }
    return Monomial::from_exponents(std::move(exps));
}

}  // namespace

void for_each_monomial_of_degree(int var_count, int degree,
                                 const std::function<void(const Monomial&)>& fn) {
    std::vector<int> tuple;
    enumerate_degree(var_count, degree, tuple,
                     [&](const std::vector<int>& t) { fn(monomial_from_tuple(t)); }, 0);
}

std::vector<Monomial> normal_monomials(const std::vector<Monomial>& leading, int degree,
                                       int var_count) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    LeadIndex index(leading);
    std::vector<Monomial> out;
    for_each_monomial_of_degree(var_count, degree, [&](const Monomial& m) {
        if (index.find_divisor(m) < 0) out.push_back(m);
    });
    GradedLexOrder order(var_count);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    return out;
}

long count_normal_monomials(const std::vector<Monomial>& leading, int degree, int var_count) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    LeadIndex index(leading);
    long count = 0;
    for_each_monomial_of_degree(var_count, degree, [&](const Monomial& m) {
        if (index.find_divisor(m) < 0) ++count;
    });
    return count;
}

}  // namespace mkoszul
