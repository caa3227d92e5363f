#pragma once

#include "egt/bitset.hpp"
#include "egt/graph.hpp"
#include "egt/rational.hpp"

#include <cstdint>

namespace egt {

enum class CertMethod { Spectral, Sampled };

/// Evidence that all subset-pair densities of a host stay within
/// lambda / sqrt(|A||B|) of p.  Spectral certificates are sound (expander
/// mixing); sampled ones are lower-bound evidence only.
struct PseudoRandomCertificate {
    Rational p;
    double lambda = 0.0;
    CertMethod method = CertMethod::Spectral;
    double evidence = 0.0;  // second eigenvalue magnitude / worst deviation
};

/// |d(A,B) - p| * sqrt(|A||B|) with d counting ordered pairs.
double subset_pair_deviation(const Graph& g, const Bitset& a, const Bitset& b,
                             const Rational& p);

/// Requires a regular host; p := degree/(N-1), lambda := second-largest
/// adjacency eigenvalue magnitude (dense symmetric eigensolver).
PseudoRandomCertificate certify_pseudorandom_spectral(const Graph& g);

/// Worst deviation over `pairs` seeded random subset pairs; p defaults to
/// the edge density 2m/(N(N-1)).
PseudoRandomCertificate certify_pseudorandom_sampled(const Graph& g, int pairs,
                                                     std::uint64_t seed);

}  // namespace egt
