#pragma once

#include <random>

#include <missreg/missreg.hpp>

namespace testing_support {

using namespace missreg;

/// Small simulated problem with an AR(1) design and Bernoulli masks.
inline sim::SimulatedData small_problem(std::uint64_t seed, Index n = 120, Index p = 8, Index q = 4,
                                        double missing = 0.1)
{
    sim::SimulationSpec s;
    s.n = n;
    s.p = p;
    s.q = q;
    s.rho_eps = 0.5;
    s.rho_w = Vector::Constant(q, missing);
    s.b = sim::BScheme::bernoulli(0.5, 0.8);
    s.seed = seed;
    return sim::gen_dataset(s);
}

inline SurrogateMoments small_moments(std::uint64_t seed, Index n = 120, Index p = 8, Index q = 4,
                                      double missing = 0.1)
{
    const auto d = small_problem(seed, n, p, q, missing);
    return compute_moments(d.x, d.z);
}

inline Matrix random_matrix(Index r, Index c, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    Matrix m(r, c);
    for (Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
    return m;
}

} // namespace testing_support
