// Command-line front end: exact multiplier systems and numerical checks for
// the level-5 theta group.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "theta5/core.hpp"
#include "theta5/eta.hpp"
#include "theta5/gamma5.hpp"
#include "theta5/io.hpp"
#include "theta5/theta.hpp"
#include "theta5/transform.hpp"
#include "theta5/verify.hpp"

namespace {

using namespace theta5;

struct GlobalOpts {
    long prec = 128;
    bool quiet = false;
};

int run_app(int argc, char** argv) {
    CLI::App app{"Multiplier systems, theta constants and coset geometry on Gamma_{theta,5}"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--prec", g.prec, "working precision in bits")->capture_default_str();
    app.add_flag("--quiet", g.quiet, "suppress progress output on stderr");

    std::string matrix_s, tau_s = "0+1i", v_s = "0", char_s, method = "series";
    std::string system = "F", case_s = "I", group = "gamma1", suite = "all";
    long k = 1, bound = 12, count = 10, entry_bound = 100;
    std::uint64_t seed = 42;
    bool plain = false;

    auto* eta_mult = app.add_subcommand("eta-mult", "exact eta multiplier nu_eta(M)");
    eta_mult->add_option("--matrix", matrix_s, "matrix as \"a b c d\" or JSON")->required();

    auto* eta_verify = app.add_subcommand("eta-verify", "residual of the eta transformation law");
    eta_verify->add_option("--matrix", matrix_s)->required();
    eta_verify->add_option("--tau", tau_s, "point in the upper half plane, e.g. \"0.3+0.8i\"");

    auto* theta_eval = app.add_subcommand("theta-eval", "evaluate theta[eps;eps'](v, tau)");
    theta_eval->add_option("--char", char_s, "characteristic \"eps eps'\"")->required();
    theta_eval->add_option("--v", v_s);
    theta_eval->add_option("--tau", tau_s);
    theta_eval->add_option("--method", method)->check(CLI::IsMember({"series", "product"}));

    auto* transform = app.add_subcommand("transform", "theta transformation data for M");
    transform->add_option("--matrix", matrix_s)->required();
    transform->add_option("--char", char_s)->required();

    auto* mult = app.add_subcommand("mult", "multiplier system value on Gamma_{theta,5}");
    mult->add_option("--system", system)->check(CLI::IsMember({"A", "B", "F", "G"}));
    mult->add_option("--matrix", matrix_s)->required();
    mult->add_option("--k", k, "power for F/G systems");

    auto* kernel = app.add_subcommand("kernel", "kernel membership of nu_{F^k}");
    kernel->add_option("--k", k)->required();
    kernel->add_option("--matrix", matrix_s)->required();

    auto* cosets = app.add_subcommand("cosets", "coset transversals with certificates");
    cosets->add_option("--group", group)->check(CLI::IsMember({"gamma1", "kernel"}));
    cosets->add_option("--k", k);
    cosets->add_flag("--plain", plain, "print reps as plain \"a b c d\" lines");

    auto* cusps_cmd = app.add_subcommand("cusps", "cusp classes of Gamma_{theta,5}");
    cusps_cmd->add_option("--bound", bound);

    auto* sample = app.add_subcommand("sample", "seeded members of a residue class");
    sample->add_option("--case", case_s)->check(CLI::IsMember({"I", "-I", "S", "-S"}));
    sample->add_option("--count", count);
    sample->add_option("--bound", entry_bound);
    sample->add_option("--seed", seed);

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    verify_cmd->add_option("--suite", suite, "all or c1..c10");
    verify_cmd->add_option("--seed", seed);

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    const Prec prec = static_cast<Prec>(g.prec);
    const int digits = static_cast<int>(prec * 0.30103) + 2;

    if (eta_mult->parsed()) {
        std::cout << rou_json(nu_eta(parse_matrix_arg(matrix_s))).dump() << "\n";
        return 0;
    }
    if (eta_verify->parsed()) {
        BigFloat r = verify_eta_transform(parse_matrix_arg(matrix_s), parse_complex(tau_s, prec), prec);
        std::cout << json{{"residual", r.str(6)}}.dump() << "\n";
        return 0;
    }
    if (theta_eval->parsed()) {
        ThetaChar ch = parse_char_arg(char_s);
        BigComplex v = parse_complex(v_s, prec), tau = parse_complex(tau_s, prec);
        BigComplex val = method == "product" ? theta_product(ch, v, tau, prec)
                                             : theta_series(ch, v, tau, prec);
        std::cout << json{{"re", val.re.str(digits)}, {"im", val.im.str(digits)},
                          {"method", method}}
                         .dump()
                  << "\n";
        return 0;
    }
    if (transform->parsed()) {
        TransformData td = transform_general(parse_matrix_arg(matrix_s), parse_char_arg(char_s));
        std::cout << transform_json(td).dump() << "\n";
        return 0;
    }
    if (mult->parsed()) {
        SL2Matrix m = parse_matrix_arg(matrix_s);
        json out;
        if (system == "A")
            out = multiplier_json(nu_product_A(m));
        else if (system == "B")
            out = multiplier_json(nu_product_B(m));
        else if (system == "F")
            out = json{{"value", rou_json(nu_F(m, k))}, {"exponent", int_json(f_exponent(m))},
                       {"k", k}, {"case", to_string(residue_case(m))}};
        else
            out = json{{"value", rou_json(nu_G(m, k))}, {"exponent", int_json(g_exponent(m))},
                       {"k", k}, {"case", to_string(residue_case(m))}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (kernel->parsed()) {
        bool member = kernel_member_F(parse_matrix_arg(matrix_s), k);
        std::cout << json{{"member", member}}.dump() << "\n";
        return 0;
    }
    if (cosets->parsed()) {
        CosetTable t = group == "gamma1" ? coset_reps_gamma1() : coset_reps_kernel(k);
        Certificate cert =
            group == "gamma1" ? certify_gamma1_table(t) : certify_kernel_table(t, k);
        if (plain) {
            for (const auto& m : t.reps) std::cout << m.text() << "\n";
            return cert.ok ? 0 : 2;
        }
        json out = coset_table_json(t);
        out["certified"] = cert.ok;
        if (!cert.ok) out["certificate_failure"] = cert.detail;
        std::cout << out.dump() << "\n";
        return cert.ok ? 0 : 2;
    }
    if (cusps_cmd->parsed()) {
        CuspResult r = cusps(bound);
        json cls = json::array();
        for (const auto& c : r.classes) cls.push_back(cusp_json(c));
        std::cout << json{{"classes", cls}, {"count", r.classes.size()}, {"decided", r.decided}}.dump()
                  << "\n";
        return r.decided ? 0 : 2;
    }
    if (sample->parsed()) {
        auto ms = sample_members(residue_case_from_string(case_s), static_cast<std::size_t>(count),
                                 Int(entry_bound), seed);
        json arr = json::array();
        for (const auto& m : ms) arr.push_back(matrix_json(m));
        std::cout << json{{"case", case_s}, {"seed", seed}, {"members", arr}}.dump() << "\n";
        return 0;
    }
    if (verify_cmd->parsed()) {
        verify::Options vo;
        vo.prec = prec;
        vo.seed = seed;
        vo.suite = suite;
        auto results = verify::run(vo, g.quiet ? nullptr : &std::cerr);
        std::cout << verify::report_json(vo, results).dump(2) << "\n";
        return verify::all_pass(results) ? 0 : 2;
    }
    return 64;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
