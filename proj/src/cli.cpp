#include "cayleyq/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cayleyq/cayley.hpp"
#include "cayleyq/json_io.hpp"
#include "cayleyq/quadspace.hpp"
#include "cayleyq/selftest.hpp"
#include "cayleyq/subgroup.hpp"

namespace cayleyq {

namespace {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json read_json(const std::string& path, std::istream& in) {
    std::ifstream file;
    std::istream* src = &in;
    if (path != "-") {
        file.open(path);
        if (!file) throw InputError("cannot open " + path);
        src = &file;
    }
    try {
        return json::parse(*src);
    } catch (const json::parse_error& e) {
        throw InputError((path == "-" ? std::string("stdin") : path) + ": " + e.what());
    }
}

BilinearSpace space_for(const std::optional<std::string>& space_path, std::size_t n, std::istream& in) {
    if (!space_path) return BilinearSpace::identity(n);
    BilinearSpace sp = space_from_json(read_json(*space_path, in));
    if (sp.dim() != n) throw DimensionMismatch("space dimension does not match the matrix");
    return sp;
}

json verdict_bundle(const BilinearSpace& sp, const Isometry<RatFunc>& sigma) {
    json j = to_json(in_n(sp, sigma));
    j["matrix"] = to_json(sigma.matrix());
    return j;
}

json neumann_json(const NeumannReport& r, int m) {
    return {{"m", m},
            {"d", to_json(r.d)},
            {"residual_ok", r.residual_ok},
            {"inverse_gap", r.inverse_gap.str()},
            {"inverse_gap_infinitesimal", r.inverse_gap_infinitesimal}};
}

bool neumann_ok(const NeumannReport& r, int m) { return r.residual_ok && (m < 3 || r.inverse_gap_infinitesimal); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rotations over ordered fields: Cayley transform, reflections, spinor norms, and the "
                 "subgroup of rotations infinitely near the identity"};
    app.name(args.empty() ? "cayleyq" : args[0]);
    app.require_subcommand(1);

    std::string input = "-";
    std::optional<std::string> space;
    int m = 5;
    std::size_t dim = 3;
    std::string field = "qe";
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::size_t max_dim = 6;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input, "matrix JSON file, '-' for stdin")->capture_default_str();
    };

    auto* c_cayley = app.add_subcommand("cayley", "apply the Cayley map (I - A)(I + A)^-1");
    add_input(c_cayley);
    auto* c_inv = app.add_subcommand("inv-cayley", "map an orthogonal matrix back to its skew parameter");
    add_input(c_inv);
    auto* c_dec = app.add_subcommand("decompose", "write an isometry as a product of reflections");
    add_input(c_dec);
    c_dec->add_option("-s,--space", space, "bilinear space JSON (default: identity form)");
    auto* c_spin = app.add_subcommand("spinor", "spinor norm of an isometry");
    add_input(c_spin);
    c_spin->add_option("-s,--space", space, "bilinear space JSON (default: identity form)");
    auto* c_inn = app.add_subcommand("in-n", "decide membership in N for a rotation of the identity form");
    add_input(c_inn);
    c_inn->add_option("--field", field, "coefficient field: qe = Q(e), q = Q")
        ->check(CLI::IsMember({"qe", "q"}))
        ->capture_default_str();
    auto* c_neu = app.add_subcommand("neumann", "check (I + eB) D = I + e^m B^m for a rational skew B");
    add_input(c_neu);
    c_neu->add_option("-m,--m", m, "odd truncation order")->capture_default_str();
    auto* c_demo = app.add_subcommand("demo", "witnesses and certificates for N in dimension n");
    c_demo->add_option("-n,--n", dim, "dimension (>= 3)")->capture_default_str();
    c_demo->add_option("-m,--m", m, "odd truncation order for the Neumann check")->capture_default_str();
    auto* c_self = app.add_subcommand("selftest", "run the property suite");
    c_self->add_option("--trials", trials, "samples per criterion (default: acceptance counts)");
    c_self->add_option("--seed", seed, "random seed")->capture_default_str();
    c_self->add_option("--max-dim", max_dim, "largest sampled dimension (>= 3)")->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (c_cayley->parsed()) {
            const Mat<RatFunc> a = matrix_from_json(read_json(input, in));
            const Mat<RatFunc> q = cayley(a);
            json j = {{"result", to_json(q)}, {"input_skew", is_skew(a)}};
            int code = kOk;
            if (is_skew(a)) {
                const bool orth = is_orthogonal(q);
                const bool det1 = det(q) == RatFunc(1);
                j["orthogonal"] = orth;
                j["det_one"] = det1;
                if (!orth || !det1) code = kCheckFailed;
            }
            out << j.dump(2) << '\n';
            return code;
        }
        if (c_inv->parsed()) {
            const Mat<RatFunc> q = matrix_from_json(read_json(input, in));
            if (!is_orthogonal(q)) throw InputError("inv-cayley expects an orthogonal matrix");
            const Mat<RatFunc> a = cayley(q);
            const bool skew = is_skew(a);
            out << json{{"result", to_json(a)}, {"skew", skew}}.dump(2) << '\n';
            return skew ? kOk : kCheckFailed;
        }
        if (c_dec->parsed() || c_spin->parsed()) {
            const Mat<RatFunc> mtx = matrix_from_json(read_json(input, in));
            const BilinearSpace sp = space_for(space, mtx.dim(), in);
            const Isometry<RatFunc> sigma(sp, mtx);
            const auto rs = decompose(sp, sigma);
            if (c_dec->parsed()) {
                const bool ok = compose(sp, rs) == sigma;
                out << json{{"reflections", to_json(rs)}, {"length", rs.vectors.size()}, {"det", sigma.det_sign()},
                            {"round_trip", ok}}
                           .dump(2)
                    << '\n';
                return ok ? kOk : kCheckFailed;
            }
            out << json{{"spinor_norm", spinor_norm(sp, rs).str()}, {"reflections", rs.vectors.size()}}.dump(2)
                << '\n';
            return kOk;
        }
        if (c_inn->parsed()) {
            const Mat<RatFunc> mtx = matrix_from_json(read_json(input, in));
            const auto sp = BilinearSpace::identity(mtx.dim());
            json j;
            if (field == "q")
                j = to_json(in_n(sp, Isometry<Rat>(sp, to_rational(mtx))));
            else
                j = to_json(in_n(sp, Isometry<RatFunc>(sp, mtx)));
            j["field"] = field;
            out << j.dump(2) << '\n';
            return kOk;
        }
        if (c_neu->parsed()) {
            const Mat<Rat> b = to_rational(matrix_from_json(read_json(input, in)));
            const NeumannReport r = neumann_check(b, m);
            out << neumann_json(r, m).dump(2) << '\n';
            return neumann_ok(r, m) ? kOk : kCheckFailed;
        }
        if (c_demo->parsed()) {
            if (dim > kMaxInputDim) throw SizeLimitExceeded("dimension exceeds the limit of 8");
            const auto sp = BilinearSpace::identity(dim);
            const Witnesses w = witnesses(dim);
            Mat<Rat> b(dim);
            b(0, 1) = 1;
            b(1, 0) = -1;
            const NeumannReport r = neumann_check(b, m);
            const json inside = verdict_bundle(sp, w.inside);
            const json outside = verdict_bundle(sp, w.outside);
            const auto id = Mat<RatFunc>::identity(dim);
            const bool proper = !outside.at("member").get<bool>();
            const bool non_central =
                inside.at("member").get<bool>() && w.inside.matrix() != id && w.inside.matrix() != -id;
            out << json{{"n", dim},
                        {"generator", to_json(b)},
                        {"inside", inside},
                        {"outside", outside},
                        {"proper", proper},
                        {"non_central", non_central},
                        {"neumann", neumann_json(r, m)}}
                       .dump(2)
                << '\n';
            return proper && non_central && neumann_ok(r, m) ? kOk : kCheckFailed;
        }
        if (c_self->parsed()) {
            const SuiteConfig cfg = trials > 0 ? SuiteConfig::scaled(trials, seed, max_dim) : [&] {
                SuiteConfig c;
                c.seed = seed;
                c.max_dim = max_dim;
                return c;
            }();
            if (cfg.max_dim < 3 || cfg.max_dim > kMaxInputDim)
                throw InputError("--max-dim must lie in [3, " + std::to_string(kMaxInputDim) + "]");
            const auto results = run_suite(cfg);
            json crit = json::array();
            bool all = true;
            for (const auto& r : results) {
                crit.push_back(to_json(r));
                all = all && r.pass();
            }
            out << json{{"seed", seed}, {"max_dim", cfg.max_dim}, {"criteria", crit}, {"pass", all}}.dump(2) << '\n';
            return all ? kOk : kCheckFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "check failed: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kInputError;
}

}  // namespace cayleyq
