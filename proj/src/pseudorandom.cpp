#include "egt/pseudorandom.hpp"

#include "egt/errors.hpp"
#include "egt/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace egt {

double subset_pair_deviation(const Graph& g, const Bitset& a, const Bitset& b,
                             const Rational& p) {
    const double na = static_cast<double>(a.count());
    const double nb = static_cast<double>(b.count());
    if (na == 0 || nb == 0)
        throw precondition_error("subset_pair_deviation: empty subset");
    double cross = 0;
    a.for_each([&](int v) { cross += static_cast<double>(g.row(v).count_and(b)); });
    const double d = cross / (na * nb);
    return std::abs(d - p.convert_to<double>()) * std::sqrt(na * nb);
}

PseudoRandomCertificate certify_pseudorandom_spectral(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw precondition_error("certify_pseudorandom: need at least 2 vertices");
    const int deg = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != deg)
            throw precondition_error("certify_pseudorandom: spectral mode needs a regular host");

    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v)
        g.row(v).for_each([&](int u) { adj(v, u) = 1.0; });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj,
                                                          Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
    // The top eigenvalue of a connected regular graph is the degree; the
    // certificate takes the largest magnitude among the rest.
    const double lambda = std::max(std::abs(ev(0)), std::abs(ev(n - 2)));

    PseudoRandomCertificate cert;
    cert.p = Rational(deg, n - 1);
    cert.lambda = lambda;
    cert.method = CertMethod::Spectral;
    cert.evidence = lambda;
    return cert;
}

PseudoRandomCertificate certify_pseudorandom_sampled(const Graph& g, int pairs,
                                                     std::uint64_t seed) {
    const int n = g.n();
    if (n < 2) throw precondition_error("certify_pseudorandom: need at least 2 vertices");
    if (pairs < 1) throw precondition_error("certify_pseudorandom: need at least one pair");
    const Rational p(2 * g.m(), static_cast<long>(n) * (n - 1));
    Rng rng(seed);
    double worst = 0;
    const Bitset all = g.vertices();
    for (int i = 0; i < pairs; ++i) {
        const std::size_t sa = 1 + rng.below(static_cast<std::uint64_t>(n));
        const std::size_t sb = 1 + rng.below(static_cast<std::uint64_t>(n));
        Bitset a = Bitset::from_vector(static_cast<std::size_t>(n),
                                       rng.sample_without_replacement(all, sa));
        Bitset b = Bitset::from_vector(static_cast<std::size_t>(n),
                                       rng.sample_without_replacement(all, sb));
        worst = std::max(worst, subset_pair_deviation(g, a, b, p));
    }
    PseudoRandomCertificate cert;
    cert.p = p;
    cert.lambda = worst;
    cert.method = CertMethod::Sampled;
    cert.evidence = worst;
    return cert;
}

}  // namespace egt
