#include "cayleyq/selftest.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "cayleyq/cayley.hpp"
#include "cayleyq/limit_oracle.hpp"
#include "cayleyq/sampling.hpp"
#include "cayleyq/subgroup.hpp"

namespace cayleyq {

namespace {

// Every criterion draws from its own stream so that results do not depend on
// which other criteria ran.
Rng stream_for(const SuiteConfig& cfg, int criterion) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32U),
                      static_cast<std::uint32_t>(criterion)};
    return Rng(seq);
}

class Tally {
public:
    Tally(int id, std::string title) {
        r_.id = id;
        r_.title = std::move(title);
    }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++r_.checks;
        if (ok) return;
        if (r_.failures++ == 0) r_.first_failure = describe();
    }

    /// Runs body; an escaping exception counts as a failed check.
    template <class Body>
    void guarded(const std::string& what, Body&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return what + ": " + e.what(); });
        }
    }

    CriterionResult done() { return std::move(r_); }

private:
    CriterionResult r_;
};

std::size_t pick_dim(Rng& rng, std::size_t lo, std::size_t hi, const SuiteConfig& cfg) {
    hi = std::max(lo, std::min(hi, cfg.max_dim));
    return static_cast<std::size_t>(uniform_int(rng, static_cast<long>(lo), static_cast<long>(hi)));
}

template <OrderedField F>
std::string show(const Mat<F>& m) {
    return to_json(m).dump();
}

std::vector<Mat<Rat>> prop3_generators(const SuiteConfig& cfg) {
    Rng rng = stream_for(cfg, 2);
    std::vector<Mat<Rat>> out;
    for (std::size_t s = 0; s < cfg.prop3_samples; ++s) out.push_back(random_skew(rng, pick_dim(rng, 2, 5, cfg)));
    return out;
}

BilinearSpace ramp_form(std::size_t n) {
    std::vector<Rat> d;
    for (std::size_t i = 1; i <= n; ++i) d.emplace_back(static_cast<long>(i));
    return BilinearSpace(std::move(d));
}

}  // namespace

SuiteConfig SuiteConfig::scaled(std::size_t trials, std::uint64_t seed, std::size_t max_dim) {
    SuiteConfig c;
    c.seed = seed;
    c.cayley_samples = c.prop3_samples = c.decomposition_samples = c.homomorphism_pairs = c.closure_pairs =
        c.archimedean_samples = trials;
    c.field_samples = 10 * trials;
    c.max_dim = max_dim;
    return c;
}

CriterionResult check_cayley_round_trip(const SuiteConfig& cfg) {
    Tally t(1, "Cayley round trip");
    Rng rng = stream_for(cfg, 1);
    for (std::size_t s = 0; s < cfg.cayley_samples; ++s) {
        const Mat<Rat> a = random_skew(rng, pick_dim(rng, 2, 5, cfg), 3, false);
        t.guarded("sample " + std::to_string(s), [&] {
            const Mat<Rat> q = cayley(a);
            t.check(is_orthogonal(q), [&] { return "C(A) not orthogonal for A = " + show(a); });
            t.check(det(q) == Rat(1), [&] { return "det C(A) != 1 for A = " + show(a); });
            t.check(cayley(q) == a, [&] { return "C(C(A)) != A for A = " + show(a); });
        });
    }
    return t.done();
}

CriterionResult check_infinitesimal_rotation(const SuiteConfig& cfg) {
    Tally t(2, "Rotation infinitely near the identity");
    for (const auto& b : prop3_generators(cfg)) {
        t.guarded("B = " + show(b), [&] {
            const Mat<RatFunc> a = infinitesimal_rotation(b);
            const auto id = Mat<RatFunc>::identity(b.dim());
            t.check(a != id && a != -id, [&] { return "A = +-I for B = " + show(b); });
            t.check(is_orthogonal(a), [&] { return "A^T A != I for B = " + show(b); });
            t.check(det(a) == RatFunc(1), [&] { return "det A != 1 for B = " + show(b); });
            const RatFunc gap = frob_sq(id - a);
            t.check(is_infinitesimal(gap), [&] { return "frob_sq(I - A) = " + gap.str() + " not infinitesimal"; });
            t.check(order_at_zero(gap) == 2, [&] { return "frob_sq(I - A) = " + gap.str() + " has order != 2"; });
        });
    }
    return t.done();
}

CriterionResult check_neumann_identity(const SuiteConfig& cfg) {
    Tally t(3, "Truncated Neumann identity");
    for (const auto& b : prop3_generators(cfg)) {
        for (int m : {1, 3, 5, 7, 9}) {
            t.guarded("m = " + std::to_string(m) + ", B = " + show(b), [&] {
                const NeumannReport r = neumann_check(b, m);
                t.check(r.residual_ok, [&] { return "(I+eB)D != I + e^m B^m, m = " + std::to_string(m) + ", B = " + show(b); });
                if (m >= 3)
                    t.check(r.inverse_gap_infinitesimal,
                            [&] { return "inverse gap " + r.inverse_gap.str() + " not infinitesimal"; });
            });
        }
    }
    return t.done();
}

CriterionResult check_cartan_dieudonne(const SuiteConfig& cfg) {
    Tally t(4, "Cartan-Dieudonne decomposition and spinor well-definedness");
    Rng rng = stream_for(cfg, 4);
    for (std::size_t s = 0; s < cfg.decomposition_samples; ++s) {
        const std::size_t n = pick_dim(rng, 3, 6, cfg);
        const auto sp = BilinearSpace::identity(n);
        const auto sample = random_rotation<Rat>(rng, sp);
        t.guarded("sample " + std::to_string(s), [&] {
            const auto rs = decompose(sp, sample.sigma);
            const std::string where = " for sigma = " + show(sample.sigma.matrix());
            t.check(rs.vectors.size() <= n, [&] { return "more than n reflections" + where; });
            t.check(compose(sp, rs) == sample.sigma, [&] { return "compose(decompose) != sigma" + where; });
            const int parity = rs.vectors.size() % 2 == 0 ? 1 : -1;
            t.check(parity == sample.sigma.det_sign(), [&] { return "parity does not match det" + where; });
            t.check(spinor_norm(sp, rs) == spinor_norm(sp, sample.generators),
                    [&] { return "spinor norm depends on the decomposition" + where; });
        });
    }
    return t.done();
}

CriterionResult check_spinor_homomorphism(const SuiteConfig& cfg) {
    Tally t(5, "Spinor norm homomorphism and nontrivial image over Q");
    Rng rng = stream_for(cfg, 5);
    for (std::size_t s = 0; s < cfg.homomorphism_pairs; ++s) {
        const std::size_t n = pick_dim(rng, 2, 6, cfg);
        const auto sp = s % 2 == 0 ? BilinearSpace::identity(n) : ramp_form(n);
        const auto sigma = random_rotation<Rat>(rng, sp).sigma;
        const auto tau = random_rotation<Rat>(rng, sp).sigma;
        t.guarded("pair " + std::to_string(s), [&] {
            t.check(spinor_norm(sp, sigma * tau) == spinor_norm(sp, sigma) * spinor_norm(sp, tau), [&] {
                return "theta(st) != theta(s) theta(t) for s = " + show(sigma.matrix()) + ", t = " + show(tau.matrix());
            });
        });
    }
    t.guarded("tau_(1,0) tau_(1,1)", [&] {
        const auto sp = BilinearSpace::identity(2);
        const auto rho = reflect(sp, Vec<Rat>{1, 0}) * reflect(sp, Vec<Rat>{1, 1});
        const SquareClass c = spinor_norm(sp, rho);
        t.check(c == square_class(Rat(2)) && !c.is_trivial(),
                [&] { return "theta(tau_(1,0) tau_(1,1)) = " + c.str() + ", expected 2"; });
    });
    return t.done();
}

CriterionResult check_neg_identity_spinor(const SuiteConfig& cfg) {
    Tally t(6, "Spinor norm of -id equals det b");
    for (std::size_t n : {2, 4, 6}) {
        if (n > std::max<std::size_t>(cfg.max_dim, 2)) continue;
        for (const auto& sp : {BilinearSpace::identity(n), ramp_form(n)}) {
            t.guarded("n = " + std::to_string(n), [&] {
                const auto [theta, detb] = check_neg_identity<Rat>(sp);
                t.check(theta == detb, [&] {
                    return "theta(-id) = " + theta.str() + " but det b = " + detb.str() + " for d = " +
                           space_to_json(sp).dump();
                });
            });
        }
    }
    return t.done();
}

CriterionResult check_subgroup_n(const SuiteConfig& cfg) {
    Tally t(7, "Proper non-central normal subgroup N");
    std::vector<std::size_t> dims;
    for (std::size_t n : {3, 4, 5})
        if (n <= cfg.max_dim) dims.push_back(n);

    for (std::size_t n : dims) {
        t.guarded("witnesses n = " + std::to_string(n), [&] {
            const auto sp = BilinearSpace::identity(n);
            const Witnesses w = witnesses(n);
            const auto in = in_n(sp, w.inside);
            const auto out = in_n(sp, w.outside);
            const auto id = Mat<RatFunc>::identity(n);
            t.check(in.member && in.order_at_zero == 2,
                    [&] { return "inside witness certificate " + in.certificate.str(); });
            t.check(w.inside.matrix() != id && w.inside.matrix() != -id, [&] { return "inside witness is +-I"; });
            t.check(!out.member && out.certificate.is_constant() && leq(RatFunc(4), out.certificate),
                    [&] { return "outside witness certificate " + out.certificate.str(); });
        });
    }

    Rng rng = stream_for(cfg, 7);
    for (std::size_t s = 0; s < cfg.closure_pairs; ++s) {
        const std::size_t n = dims[s % dims.size()];
        const auto sp = BilinearSpace::identity(n);
        const Mat<Rat> b1 = random_skew(rng, n);
        const Mat<Rat> b2 = random_skew(rng, n);
        const auto rho = random_rotation<Rat>(rng, sp).sigma;
        t.guarded("closure sample " + std::to_string(s), [&] {
            const std::vector<Isometry<RatFunc>> samples{Isometry<RatFunc>(sp, infinitesimal_rotation(b1)),
                                                         Isometry<RatFunc>(sp, infinitesimal_rotation(b2))};
            const std::vector<Isometry<RatFunc>> conj{Isometry<RatFunc>(sp, embed<RatFunc>(rho.matrix()))};
            const auto report = closure_suite(sp, samples, conj);
            for (const auto& c : report.checks)
                t.check(c.pass, [&] { return c.check + " left N, certificate " + c.certificate.str(); });
        });
    }
    return t.done();
}

CriterionResult check_archimedean_degeneration(const SuiteConfig& cfg) {
    Tally t(8, "Archimedean degeneration of N over Q");
    Rng rng = stream_for(cfg, 8);
    auto probe = [&](const BilinearSpace& sp, const Isometry<Rat>& sigma) {
        t.guarded("rotation " + show(sigma.matrix()), [&] {
            const bool is_id = sigma.matrix().is_identity();
            t.check(in_n(sp, sigma).member == is_id,
                    [&] { return "membership disagrees with sigma == I for " + show(sigma.matrix()); });
        });
    };
    probe(BilinearSpace::identity(3), Isometry<Rat>::trusted(Mat<Rat>::identity(3)));
    for (std::size_t s = 0; s < cfg.archimedean_samples; ++s) {
        const auto sp = BilinearSpace::identity(pick_dim(rng, 2, 6, cfg));
        for (;;) {
            const auto sample = random_reflection_product<Rat>(rng, sp, 2 * static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(sp.dim() / 2))));
            if (sample.sigma.matrix().is_identity()) continue;
            probe(sp, sample.sigma);
            break;
        }
    }
    return t.done();
}

CriterionResult check_field_oracle(const SuiteConfig& cfg) {
    Tally t(9, "Field layer against the limit oracle");
    Rng rng = stream_for(cfg, 9);
    auto raw_poly = [&](bool nonzero) {
        for (;;) {
            std::vector<mpq_class> c(static_cast<std::size_t>(uniform_int(rng, 1, 7)));
            for (auto& x : c) x = uniform_int(rng, -5, 5);
            bool any = false;
            for (const auto& x : c) any = any || x != 0;
            if (any || !nonzero) return c;
        }
    };
    auto to_poly = [](const std::vector<mpq_class>& c) {
        std::vector<Rat> r;
        for (const auto& x : c) r.emplace_back(x);
        return Poly(std::move(r));
    };
    const RatFunc e = RatFunc::e();
    for (std::size_t s = 0; s < cfg.field_samples; ++s) {
        const auto num = raw_poly(s % 10 != 0);
        const auto den = raw_poly(true);
        t.guarded("sample " + std::to_string(s), [&] {
            const RatFunc x(to_poly(num), to_poly(den));
            const auto verdict = oracle::limit_verdict(num, den);
            t.check(verdict.has_value(), [&] { return "oracle inconclusive for " + x.str(); });
            if (verdict) {
                t.check(sign(x) == verdict->sign, [&] { return "sign disagrees with the oracle for " + x.str(); });
                t.check(is_infinitesimal(x) == verdict->infinitesimal,
                        [&] { return "is_infinitesimal disagrees with the oracle for " + x.str(); });
            }
            if (x.is_zero()) return;
            const RatFunc y(to_poly(raw_poly(true)), to_poly(raw_poly(true)));
            t.check(is_square(x * x), [&] { return "x^2 not a square for x = " + x.str(); });
            t.check(!is_square(x * x * e), [&] { return "x^2 e is a square for x = " + x.str(); });
            t.check(square_class(x * y * y) == square_class(x),
                    [&] { return "class(x y^2) != class(x) for x = " + x.str() + ", y = " + y.str(); });
        });
    }
    return t.done();
}

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg) {
    if (cfg.max_dim < 3) throw std::invalid_argument("max-dim must be at least 3");
    return {check_cayley_round_trip(cfg),        check_infinitesimal_rotation(cfg), check_neumann_identity(cfg),
            check_cartan_dieudonne(cfg),         check_spinor_homomorphism(cfg),    check_neg_identity_spinor(cfg),
            check_subgroup_n(cfg),               check_archimedean_degeneration(cfg), check_field_oracle(cfg)};
}

json to_json(const CriterionResult& r) {
    json j = {{"criterion", r.id}, {"title", r.title}, {"checks", r.checks}, {"failures", r.failures}, {"pass", r.pass()}};
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    return j;
}

}  // namespace cayleyq
