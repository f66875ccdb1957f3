#include <doctest.h>

#include <random>

#include "circlemap/geometry.hpp"
#include "circlemap/poisson.hpp"
#include "oracles.hpp"

using namespace circlemap;

namespace {

SampledCircleMap sample_power(int p, int n)
{
    return sample_map([p](cplx z) { return std::pow(z, p); }, n);
}

} // namespace

TEST_CASE("argument monotonicity of basic maps")
{
    CHECK(argument_monotone(sample_map([](cplx z) { return z; }, 256)));
    CHECK_FALSE(argument_monotone(sample_power(2, 256))); // total increase 4*pi
    CHECK_THROWS_AS(argument_monotone(sample_map([](cplx z) { return 2.0 * z; }, 64)),
                    NotUnimodularError);
}

TEST_CASE("argument monotonicity matches the criterion on a failing quotient")
{
    const RationalCircleMap f{BlaschkeProduct(0.0, {cplx(0.5, 0.0), cplx(0.5, 0.0)}),
                              BlaschkeProduct(0.0, {cplx(0.0, 0.0)})};
    REQUIRE(criterion_check(f).verdict == Verdict::NotHomeo);
    CHECK_FALSE(argument_monotone(
        sample_map([&f](cplx z) { return eval_quotient(f, z); }, 1 << 14)));
}

TEST_CASE("adaptive argument monotonicity")
{
    CHECK(argument_monotone_fn([](cplx z) { return z; }));
    CHECK_FALSE(argument_monotone_fn([](cplx z) { return z * z; }));

    const RationalCircleMap f{BlaschkeProduct(0.0, {cplx(0.3, 0.1)}), BlaschkeProduct(0.0)};
    CHECK(argument_monotone_fn([&f](cplx z) { return eval_quotient(f, z); }));
}

TEST_CASE("starlikeness of basic curves")
{
    const SampledCircleMap identity = sample_map([](cplx z) { return z; }, 512);
    CHECK(starlike_about(identity, cplx(0.0, 0.0)));
    CHECK_FALSE(starlike_about(identity, cplx(2.0, 0.0))); // winding 0

    // Sense-reversing curves are starlike too (monotone the other way).
    const SampledCircleMap reversed = sample_map([](cplx z) { return std::conj(z); }, 512);
    CHECK(starlike_about(reversed, cplx(0.0, 0.0)));

    const SampledCircleMap folding = sample_map(folding_curve, 1024);
    CHECK(starlike_about(folding, cplx(1.0, 0.0)));
    CHECK_FALSE(starlike_about(folding, cplx(4.0, 0.0)));

    CHECK_THROWS_AS(starlike_about(identity, cplx(1.0, 0.0)), CenterOnCurveError);
}

TEST_CASE("winding-number oracle backs the starlike verdicts")
{
    const SampledCircleMap folding = sample_map(folding_curve, 1024);
    std::vector<cplx> about_outside;
    for (const cplx& v : folding.values())
        about_outside.push_back(v - cplx(4.0, 0.0));
    CHECK(oracles::winding_number(about_outside) == 0);

    std::vector<cplx> about_center;
    for (const cplx& v : folding.values())
        about_center.push_back(v - cplx(1.0, 0.0));
    CHECK(oracles::winding_number(about_center) == 1);
}

TEST_CASE("starlikeness is invariant under rotations of curve and parameter")
{
    const StarlikeEmbedding emb = random_starlike_embedding(17, 3, 3, 512);
    REQUIRE(starlike_about(emb.samples, emb.profile.center));

    for (double alpha : {0.7, 2.1}) {
        std::vector<cplx> rotated;
        for (const cplx& v : emb.samples.values())
            rotated.push_back(std::polar(1.0, alpha) * (v - emb.profile.center) +
                              emb.profile.center);
        CHECK(starlike_about(SampledCircleMap(rotated), emb.profile.center));
    }

    // Pre-rotation of the parameter is a cyclic shift of the samples.
    for (int shift : {17, 200}) {
        std::vector<cplx> shifted;
        const auto& vals = emb.samples.values();
        for (std::size_t k = 0; k < vals.size(); ++k)
            shifted.push_back(vals[(k + shift) % vals.size()]);
        CHECK(starlike_about(SampledCircleMap(shifted), emb.profile.center));
    }
}

TEST_CASE("rational starlikeness scan")
{
    const auto id = [](cplx z) { return z; };
    const auto one = [](cplx) { return cplx(1.0, 0.0); };
    CHECK(nevanlinna_residual(id, one, cplx(0.0, 0.0), 256) == doctest::Approx(1.0));

    const auto square = [](cplx z) { return z * z; };
    const auto dsquare = [](cplx z) { return 2.0 * z; };
    CHECK(nevanlinna_residual(square, dsquare, cplx(0.0, 0.0), 256) == doctest::Approx(2.0));

    const NevanlinnaScan scan = nevanlinna_scan(folding_rational, folding_rational_derivative,
                                                cplx(1.0, 0.0), 4096);
    CHECK(scan.min_real_part >= -1e-10);
    CHECK(std::abs(scan.argmin_angle - kPi) <= 1e-3);

    CHECK_THROWS_AS(nevanlinna_scan(id, one, cplx(1.0, 0.0), 256), PoleOnCircleError);
}

TEST_CASE("trigonometric factorization residual")
{
    CHECK(factorization_identity_residual(1024) <= 1e-13);
    CHECK(factorization_identity_residual(4096) <= 1e-12);
    CHECK_THROWS_AS(factorization_identity_residual(8), DomainError);

    // Endpoint spot checks of both sides.
    CHECK(2.5 + 2.0 - 1.0 - 0.5 == doctest::Approx(3.0));
    CHECK((5.0 - 2.0) * 1.0 == doctest::Approx(3.0));
    CHECK(2.5 - 2.0 - 1.0 + 0.5 == doctest::Approx(0.0));
}

TEST_CASE("antipodal balance point")
{
    StarlikeProfile flat;
    flat.center = 0.0;
    flat.radial = [](double) { return 1.0; };
    flat.angle = [](double t) { return t; };
    const double t0 = antipodal_balance_point(flat, 1e-10);
    CHECK(std::abs(flat.angle(t0 + kPi) - flat.angle(t0) - kPi) <= 1e-10);

    StarlikeProfile wavy = flat;
    wavy.angle = [](double t) { return t + 0.3 * std::sin(t); };
    const double t1 = antipodal_balance_point(wavy, 1e-10);
    CHECK(std::abs(wavy.angle(t1 + kPi) - wavy.angle(t1) - kPi) <= 1e-10);

    // psi(0) > 0 here; the root sits at pi/2 (dense-scan cross-check).
    StarlikeProfile skew = flat;
    skew.angle = [](double t) { return t + 0.25 * (1.0 - std::cos(t)); };
    const double t2 = antipodal_balance_point(skew, 1e-12);
    CHECK(std::abs(skew.angle(t2 + kPi) - skew.angle(t2) - kPi) <= 1e-12);
    double scan_best = std::abs(skew.angle(kPi) - skew.angle(0.0) - kPi);
    double scan_theta = 0.0;
    for (int j = 1; j < (1 << 20); ++j) {
        const double u = kPi * static_cast<double>(j) / (1 << 20);
        const double v = std::abs(skew.angle(u + kPi) - skew.angle(u) - kPi);
        if (v < scan_best) {
            scan_best = v;
            scan_theta = u;
        }
    }
    CHECK(std::abs(t2 - scan_theta) <= 1e-4);
    CHECK(std::abs(t2 - kPi / 2.0) <= 1e-6);

    StarlikeProfile broken = flat;
    broken.angle = [](double t) { return 0.5 * t; }; // violates the total-increase invariant
    CHECK_THROWS_AS(antipodal_balance_point(broken, 1e-10), NoSignChangeError);
}

TEST_CASE("embedding reports")
{
    const SampledCircleMap identity = sample_map([](cplx z) { return z; }, 512);
    const EmbeddingReport a = embedding_report(identity, cplx(0.0, 0.0));
    CHECK(a.injective);
    CHECK(a.sense_preserving);
    CHECK(a.winding_number == 1);

    const EmbeddingReport b = embedding_report(sample_power(2, 512), cplx(0.0, 0.0));
    CHECK(b.winding_number == 2);
    CHECK_FALSE(b.injective);
    CHECK_FALSE(b.sense_preserving);

    const SampledCircleMap folding = sample_map(folding_curve, 1024);
    const EmbeddingReport c = embedding_report(folding, cplx(1.0, 0.0));
    CHECK(c.injective);
    CHECK(c.winding_number == 1);
}

TEST_CASE("random starlike embeddings verify their own construction")
{
    const StarlikeEmbedding trivial = random_starlike_embedding(5, 0, 0, 256);
    for (int k = 0; k < 256; ++k) {
        const cplx expected =
            trivial.profile.center + std::polar(1.0, kTwoPi * k / 256.0);
        CHECK(std::abs(trivial.samples.values()[k] - expected) < 1e-14);
    }
    CHECK(starlike_about(trivial.samples, trivial.profile.center));

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const StarlikeEmbedding emb = random_starlike_embedding(seed, 4, 4, 512);
        CHECK(starlike_about(emb.samples, emb.profile.center));
        CHECK(embedding_report(emb.samples, emb.profile.center).injective);
        const double t0 = antipodal_balance_point(emb.profile, 1e-9);
        CHECK(std::abs(emb.profile.angle(t0 + kPi) - emb.profile.angle(t0) - kPi) <= 1e-9);
    }
}

TEST_CASE("first-order spectrum mass of generated embeddings")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const StarlikeEmbedding emb = random_starlike_embedding(seed, 3, 5, 1024);
        const FourierSpectrum sp = spectrum(emb.samples, 1);
        CHECK(std::abs(sp.at(1)) + std::abs(sp.at(-1)) > 1e-6);
    }
}

TEST_CASE("bandlimited embeddings round-trip through the transform")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const BandlimitedEmbedding emb = random_bandlimited_embedding(seed, 6, 256);
        CHECK(starlike_about(emb.samples, cplx(0.0, 0.0)));
        const FourierSpectrum sp = spectrum(emb.samples, 6);
        for (int m = -6; m <= 6; ++m)
            CHECK(std::abs(sp.at(m) - emb.coefficient(m)) <= 1e-12);
    }
}

TEST_CASE("star center search")
{
    const SampledCircleMap folding = sample_map(folding_curve, 512);
    const auto center = find_star_center(folding);
    REQUIRE(center.has_value());
    CHECK(starlike_about(folding, *center));

    const SampledCircleMap shifted =
        sample_map([](cplx z) { return z + cplx(3.0, -2.0); }, 256);
    const auto easy = find_star_center(shifted);
    REQUIRE(easy.has_value());
    CHECK(std::abs(*easy - cplx(3.0, -2.0)) < 0.5);
}

TEST_CASE("monotone-argument oracle agrees with the criterion on random quotients")
{
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> unit_draw(0.0, 1.0);
    std::uniform_int_distribution<int> deg(1, 4);

    int compared = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = deg(rng);
        std::vector<cplx> nz, dz;
        for (int k = 0; k < n; ++k)
            nz.push_back(std::polar(0.7 * std::sqrt(unit_draw(rng)), angle(rng)));
        for (int k = 0; k + 1 < n; ++k)
            dz.push_back(std::polar(0.5 * std::sqrt(unit_draw(rng)), angle(rng)));
        const RationalCircleMap f{BlaschkeProduct(angle(rng), nz),
                                  BlaschkeProduct(angle(rng), dz)};
        const CriterionReport rep = criterion_check(f);
        if (rep.verdict == Verdict::Inconclusive)
            continue;
        ++compared;
        const bool monotone = argument_monotone(
            sample_map([&f](cplx z) { return eval_quotient(f, z); }, 1 << 16));
        CHECK(monotone == (rep.verdict == Verdict::Homeo));
    }
    CHECK(compared >= 20);
}
