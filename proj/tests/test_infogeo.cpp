#include "a1gm/infogeo.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "a1gm/errors.hpp"
#include "a1gm/nmmf.hpp"
#include "a1gm/rng.hpp"
#include "helpers.hpp"
#include "oracles/poset_brute.hpp"

using a1gm::MatrixTriple;
using a1gm::PosetModel;
using testutil::matrix;

namespace {

MatrixTriple ones_triple(std::size_t I, std::size_t J, std::size_t N, std::size_t M) {
    MatrixTriple T;
    T.X = a1gm::DenseMatrix(I, J, 1.0);
    if (N > 0)
        T.Y = a1gm::DenseMatrix(N, J, 1.0);
    if (M > 0)
        T.Z = a1gm::DenseMatrix(I, M, 1.0);
    return T;
}

MatrixTriple recon_triple(const MatrixTriple& T, double alpha = 1.0, double beta = 1.0) {
    const a1gm::Rank1Factors F = a1gm::best_rank1_nmmf(T, alpha, beta);
    MatrixTriple R;
    R.X = a1gm::outer(F.w, F.h);
    if (!T.Y.empty())
        R.Y = a1gm::outer(F.a, F.h);
    if (!T.Z.empty())
        R.Z = a1gm::outer(F.w, F.b);
    return R;
}

} // namespace

TEST(PosetModel, DomainLayout) {
    const PosetModel m = a1gm::model_from_triple(ones_triple(2, 2, 1, 1));
    EXPECT_EQ(m.omega_size(), 8u);
    EXPECT_TRUE(m.contains(1, 1));
    EXPECT_TRUE(m.contains(2, 3));  // extra-column part of a main row
    EXPECT_TRUE(m.contains(3, 2));  // extra row
    EXPECT_FALSE(m.contains(3, 3)); // missing corner
    EXPECT_FALSE(m.contains(0, 1));
    EXPECT_FALSE(m.contains(4, 1));
    EXPECT_EQ(m.index_of(1, 1), 0u);
    EXPECT_EQ(m.index_of(2, 3), 5u);
    EXPECT_EQ(m.index_of(3, 1), 6u);
}

TEST(PosetModel, UniformSingletonBlocks) {
    // 1x1 blocks of ones: three cells, each with mass 1/3.
    const PosetModel m = a1gm::model_from_triple(ones_triple(1, 1, 1, 1));
    ASSERT_EQ(m.omega_size(), 3u);
    for (double mass : m.p)
        EXPECT_LE(testutil::rel_diff(mass, 1.0 / 3.0), 1e-15);
    EXPECT_EQ(a1gm::eta_of(m, 1, 1), 1.0);
    EXPECT_LE(testutil::rel_diff(a1gm::eta_of(m, 2, 1), 1.0 / 3.0), 1e-15);
    EXPECT_LE(testutil::rel_diff(a1gm::eta_of(m, 1, 2), 1.0 / 3.0), 1e-15);
}

TEST(PosetModel, MassesNormalized) {
    a1gm::SplitMix64 rng(51);
    for (int rep = 0; rep < 10; ++rep) {
        const MatrixTriple T = testutil::random_triple(1 + rng.next() % 4, 1 + rng.next() % 4,
                                                       rng.next() % 3, rng.next() % 3, rng);
        const PosetModel m = a1gm::model_from_triple(T);
        double total = 0.0;
        for (double mass : m.p)
            total += mass;
        EXPECT_LE(std::abs(total - 1.0), 1e-12);
        EXPECT_EQ(a1gm::eta_of(m, 1, 1), 1.0);
    }
}

TEST(PosetModel, BlockMassIdentities) {
    // The head of each extra block's up-set isolates that block's share.
    const MatrixTriple T = [] {
        MatrixTriple t;
        t.X = matrix({{3, 1}, {6, 2}}); // S(X) = 12
        t.Y = matrix({{3, 1}});         // S(Y) = 4
        t.Z = matrix({{2}, {4}});       // S(Z) = 6
        return t;
    }();
    const PosetModel m = a1gm::model_from_triple(T);
    EXPECT_LE(testutil::rel_diff(a1gm::eta_of(m, 3, 1), 4.0 / 22.0), 1e-12);
    EXPECT_LE(testutil::rel_diff(a1gm::eta_of(m, 1, 3), 6.0 / 22.0), 1e-12);
}

TEST(PosetModel, EtaMatchesBruteForce) {
    a1gm::SplitMix64 rng(52);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t I = 1 + rng.next() % 4, J = 1 + rng.next() % 4;
        const std::size_t N = rng.next() % 3, M = rng.next() % 3;
        const PosetModel m = a1gm::model_from_triple(testutil::random_triple(I, J, N, M, rng));
        for (std::size_t k = 1; k <= I + N; ++k)
            for (std::size_t l = 1; l <= J + M; ++l)
                if (m.contains(k, l))
                    ASSERT_LE(testutil::rel_diff(a1gm::eta_of(m, k, l), oracle::brute_eta(m, k, l)),
                              1e-12)
                        << "eta(" << k << ", " << l << ")";
    }
}

TEST(PosetModel, ThetaMatchesLocalRatios) {
    a1gm::SplitMix64 rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t I = 1 + rng.next() % 4, J = 1 + rng.next() % 4;
        const std::size_t N = rng.next() % 3, M = rng.next() % 3;
        const PosetModel m = a1gm::model_from_triple(testutil::random_triple(I, J, N, M, rng));
        const std::vector<double>& theta = a1gm::theta_of(m);
        for (std::size_t k = 1; k <= I + N; ++k)
            for (std::size_t l = 1; l <= J + M; ++l)
                if (m.contains(k, l)) {
                    const double want = oracle::local_theta(m, k, l);
                    ASSERT_LE(std::abs(theta[m.index_of(k, l)] - want),
                              1e-10 * std::max(1.0, std::abs(want)))
                        << "theta(" << k << ", " << l << ")";
                }
    }
}

TEST(PosetModel, ThetaRoundTripsToMasses) {
    a1gm::SplitMix64 rng(54);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t I = 1 + rng.next() % 4, J = 1 + rng.next() % 4;
        const std::size_t N = rng.next() % 3, M = rng.next() % 3;
        const PosetModel m = a1gm::model_from_triple(testutil::random_triple(I, J, N, M, rng));
        const std::vector<double> back = a1gm::p_from_theta(m);
        ASSERT_EQ(back.size(), m.p.size());
        for (std::size_t idx = 0; idx < back.size(); ++idx)
            ASSERT_LE(testutil::rel_diff(back[idx], m.p[idx]), 1e-10);
    }
}

TEST(Rank1Check, AcceptsRank1Triples) {
    a1gm::SplitMix64 rng(55);
    for (int rep = 0; rep < 10; ++rep) {
        const MatrixTriple T = testutil::rank1_triple(
            testutil::random_vector(3, rng), testutil::random_vector(3, rng),
            testutil::random_vector(2, rng), testutil::random_vector(2, rng));
        const PosetModel m = a1gm::model_from_triple(T);
        const a1gm::Rank1CheckReport rep1 = a1gm::check_simultaneous_rank1(m, 1e-8);
        EXPECT_TRUE(rep1.theta_ok) << rep1.max_theta_violation;
        EXPECT_TRUE(rep1.eta_ok) << rep1.max_eta_violation;
        EXPECT_LE(rep1.max_theta_violation, 1e-10);
        EXPECT_LE(rep1.max_eta_violation, 1e-10);
        EXPECT_EQ(rep1.max_violation,
                  std::max(rep1.max_theta_violation, rep1.max_eta_violation));
    }
}

TEST(Rank1Check, AcceptsSolverReconstructions) {
    a1gm::SplitMix64 rng(56);
    for (int rep = 0; rep < 10; ++rep) {
        const MatrixTriple T = testutil::random_triple(3, 4, 2, 2, rng);
        const PosetModel m = a1gm::model_from_triple(recon_triple(T));
        const a1gm::Rank1CheckReport r = a1gm::check_simultaneous_rank1(m, 1e-8);
        EXPECT_TRUE(r.theta_ok);
        EXPECT_TRUE(r.eta_ok);
    }
}

TEST(Rank1Check, RejectsGenericTriples) {
    a1gm::SplitMix64 rng(57);
    for (int rep = 0; rep < 10; ++rep) {
        const MatrixTriple T = testutil::random_triple(3, 3, 2, 2, rng);
        const PosetModel m = a1gm::model_from_triple(T);
        const a1gm::Rank1CheckReport r = a1gm::check_simultaneous_rank1(m, 1e-8);
        EXPECT_FALSE(r.theta_ok);
        EXPECT_FALSE(r.eta_ok);
        EXPECT_GT(r.max_violation, 1e-4);
    }
}

TEST(Rank1Check, VerdictsAgree) {
    a1gm::SplitMix64 rng(58);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t I = 2 + rng.next() % 3, J = 2 + rng.next() % 3;
        const std::size_t N = rng.next() % 3, M = rng.next() % 3;
        MatrixTriple T;
        if (rep % 2 == 0) {
            T = testutil::random_triple(I, J, N, M, rng);
        } else {
            T = testutil::rank1_triple(
                testutil::random_vector(I, rng), testutil::random_vector(J, rng),
                testutil::random_vector(N, rng), testutil::random_vector(M, rng));
        }
        const a1gm::Rank1CheckReport r =
            a1gm::check_simultaneous_rank1(a1gm::model_from_triple(T), 1e-8);
        EXPECT_EQ(r.theta_ok, r.eta_ok)
            << "theta violation " << r.max_theta_violation << ", eta violation "
            << r.max_eta_violation;
    }
}

TEST(Rank1Check, PerturbationIsDetected) {
    MatrixTriple T = testutil::rank1_triple({1, 2}, {3, 1}, {1}, {2});
    T.X(0, 0) *= 1.05; // break the product structure slightly
    const a1gm::Rank1CheckReport r =
        a1gm::check_simultaneous_rank1(a1gm::model_from_triple(T), 1e-8);
    EXPECT_FALSE(r.theta_ok);
    EXPECT_FALSE(r.eta_ok);
    EXPECT_GT(r.max_theta_violation, 1e-6);
    EXPECT_GT(r.max_eta_violation, 1e-6);
}

TEST(Rank1Check, TruncatedDomainWouldRejectUniform) {
    // Uniform masses on 2x2 main / 1-row / 1-column blocks: a rank-1 model
    // (all-ones factors), yet the raw product test on the truncated domain
    // yields eta(2,2) = 3/8 versus eta(2,1)*eta(1,2) = 25/64 — a gap of
    // exactly 1/64. The corner-padded check must still accept the model.
    const PosetModel m = a1gm::model_from_triple(ones_triple(2, 2, 1, 1));
    EXPECT_LE(testutil::rel_diff(a1gm::eta_of(m, 2, 2), 3.0 / 8.0), 1e-14);
    EXPECT_LE(testutil::rel_diff(a1gm::eta_of(m, 2, 1), 5.0 / 8.0), 1e-14);
    EXPECT_LE(testutil::rel_diff(a1gm::eta_of(m, 1, 2), 5.0 / 8.0), 1e-14);

    const double raw_gap =
        std::abs(a1gm::eta_of(m, 2, 2) - a1gm::eta_of(m, 2, 1) * a1gm::eta_of(m, 1, 2));
    EXPECT_LE(testutil::rel_diff(raw_gap, 1.0 / 64.0), 1e-12);

    const a1gm::Rank1CheckReport r = a1gm::check_simultaneous_rank1(m, 1e-10);
    EXPECT_TRUE(r.theta_ok);
    EXPECT_TRUE(r.eta_ok);
    EXPECT_LE(r.max_violation, 1e-12);
}

TEST(ConservationCheck, ModelAgreesWithItself) {
    a1gm::SplitMix64 rng(59);
    const PosetModel m = a1gm::model_from_triple(testutil::random_triple(3, 3, 2, 2, rng));
    EXPECT_TRUE(a1gm::conservation_check(m, m, 1e-15));
}

TEST(ConservationCheck, ProjectionPreservesOneBodyParameters) {
    a1gm::SplitMix64 rng(60);
    for (int rep = 0; rep < 10; ++rep) {
        const MatrixTriple T = testutil::random_triple(3, 4, 2, 2, rng);
        const PosetModel input = a1gm::model_from_triple(T);
        const PosetModel projected = a1gm::model_from_triple(recon_triple(T));
        EXPECT_TRUE(a1gm::conservation_check(input, projected, 1e-10));
    }
}

TEST(ConservationCheck, DetectsDisagreement) {
    MatrixTriple A = ones_triple(2, 2, 1, 1);
    MatrixTriple B = ones_triple(2, 2, 1, 1);
    B.X(0, 0) = 2.0;
    const PosetModel ma = a1gm::model_from_triple(A);
    const PosetModel mb = a1gm::model_from_triple(B);
    EXPECT_FALSE(a1gm::conservation_check(ma, mb, 1e-6));
    EXPECT_THROW(
        a1gm::conservation_check(ma, a1gm::model_from_triple(ones_triple(2, 2, 2, 1)), 1e-6),
        a1gm::input_error);
}

TEST(PosetModel, RejectsBadInput) {
    MatrixTriple T;
    EXPECT_THROW(a1gm::model_from_triple(T), a1gm::input_error);
    T = ones_triple(2, 2, 1, 1);
    T.Y(0, 1) = 0.0;
    EXPECT_THROW(a1gm::model_from_triple(T), a1gm::input_error);

    const PosetModel m = a1gm::model_from_triple(ones_triple(2, 2, 1, 1));
    EXPECT_THROW(a1gm::eta_of(m, 3, 3), a1gm::input_error); // missing corner
    EXPECT_THROW(a1gm::eta_of(m, 0, 1), a1gm::input_error);
    EXPECT_THROW(a1gm::eta_of(m, 1, 4), a1gm::input_error);
}
