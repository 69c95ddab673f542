// mackeylab: command-line verification harness.
//
// One subcommand per family of claims:
//   verify-mackey       axioms and decompositions of the standard functors
//   verify-complex      rho-suspension complexes and their homology tables
//   verify-maps         squaring/norm/Euler-class identities
//   verify-theorem      the main comparison, degree by degree
//   verify-corollaries  the sphere equivalences
//   all                 the full sweep
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 precondition or
// usage error. Reports are deterministic: no timestamps in the JSON form.

#include "mackeylab/checks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace mackeylab;

constexpr int kDefaultMaxDegree = 32;

int max_degree_default() {
    if (const char* env = std::getenv("MACKEYLAB_MAX_DEGREE")) {
        int d = std::atoi(env);
        if (d > 0) return d;
    }
    return kDefaultMaxDegree;
}

void print_text(const CheckReport& r) {
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.check;
    for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    for (const auto& f : r.details) {
        if (f.ok())
            std::cout << "  ok    " << f.item << " = " << f.got << "\n";
        else
            std::cout << "  FAIL  " << f.item << ": expected " << f.expected << ", got " << f.got
                      << "\n";
    }
}

int emit(const std::vector<CheckReport>& reports, const std::string& format) {
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        std::cout << (reports.size() == 1 ? to_json(reports[0]) : out).dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_text(r);
    }
    for (const auto& r : reports)
        if (!r.passed()) return 1;
    return 0;
}

MackeyComplex corrupted_complex(MackeyComplex c) {
    // Flip the sign of one entry of the top differential.
    auto& d = c.diffs.rbegin()->second;
    d.f_u.at(0, d.f_u.cols() - 1) = -d.f_u.at(0, d.f_u.cols() - 1);
    return c;
}

C2Map corrupted_norm(int n) {
    C2Map norm = map_norm(n);
    // Send x{4n} to y'^2 instead of y' (degree-preserving, still compatible,
    // but the difference with the squaring map is no longer x^2 - y).
    norm.f_pullback.images[0] = norm.f_pullback.images[1];
    return norm;
}

MainTheoremData corrupted_theorem(int n) {
    MainTheoremData data = build_main_theorem(n);
    // Zero out the Euler-class pullback image on the underlying level.
    data.comparison.u_pullback.images.back() = poly_zero();
    return data;
}

std::vector<CheckReport> run_all(int max_degree) {
    std::vector<CheckReport> reports;
    reports.push_back(check_mackey());
    for (int i = 1; i <= 8; ++i) reports.push_back(check_complex_Z(i));
    for (int m = 2; m <= 8; m += 2) reports.push_back(check_complex_A(m));
    for (int n = 1; n <= 3; ++n) {
        reports.push_back(check_maps(n));
        reports.push_back(check_euler_chain(n));
        reports.push_back(check_main_theorem(n, std::max(max_degree, 8 * n)));
        reports.push_back(check_corollary_even(n));
        reports.push_back(check_corollary_odd(n));
    }
    return reports;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-rational verification of C2-equivariant Eilenberg-MacLane computations"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    bool corrupt = false;
    int n = 1;
    int i = 0, m = 0;
    std::string functor = "Z";
    int max_degree = max_degree_default();

    auto* cmd_mackey = app.add_subcommand("verify-mackey", "Standard Mackey functor suite");
    cmd_mackey->add_flag("--corrupt", corrupt, "Test hook: flip one transfer entry");

    auto* cmd_complex = app.add_subcommand("verify-complex", "rho-suspension complex homology");
    cmd_complex->add_option("--i", i, "Suspension parameter for the constant functor");
    cmd_complex->add_option("--m", m, "Suspension parameter for the Burnside functor");
    cmd_complex->add_option("--functor", functor, "Bottom coefficient functor")
        ->check(CLI::IsMember({"Z", "A"}));
    cmd_complex->add_flag("--corrupt", corrupt, "Test hook: flip one differential sign");

    auto* cmd_maps = app.add_subcommand("verify-maps", "Squaring/norm/Euler-class identities");
    cmd_maps->add_option("--n", n, "Half the rank of the bundle")->check(CLI::PositiveNumber);
    cmd_maps->add_flag("--corrupt", corrupt, "Test hook: corrupt the norm fixed-point formula");

    auto* cmd_theorem = app.add_subcommand("verify-theorem", "Main comparison, degree by degree");
    cmd_theorem->add_option("--n", n, "Half the rank of the bundle")->check(CLI::PositiveNumber);
    cmd_theorem->add_option("--max-degree", max_degree, "Truncation degree for series checks");
    cmd_theorem->add_flag("--corrupt", corrupt, "Test hook: zero one generator image");

    auto* cmd_cor = app.add_subcommand("verify-corollaries", "Sphere equivalences");
    cmd_cor->add_option("--n", n, "Sphere parameter")->check(CLI::PositiveNumber);

    auto* cmd_all = app.add_subcommand("all", "Full verification sweep");
    cmd_all->add_option("--max-degree", max_degree, "Truncation degree for series checks");

    // Accept the global --format both before and after the subcommand.
    for (CLI::App* sub : {cmd_mackey, cmd_complex, cmd_maps, cmd_theorem, cmd_cor, cmd_all})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<CheckReport> reports;
        if (cmd_mackey->parsed()) {
            reports.push_back(check_mackey(corrupt));
        } else if (cmd_complex->parsed()) {
            if (functor == "A") {
                if (m < 1) {
                    std::cerr << "verify-complex: --m must be >= 1\n";
                    return 2;
                }
                MackeyComplex c = rho_suspension_A(m);
                if (corrupt) c = corrupted_complex(std::move(c));
                reports.push_back(check_complex_A(c, m));
            } else {
                if (i < 1) {
                    std::cerr << "verify-complex: --i must be >= 1\n";
                    return 2;
                }
                MackeyComplex c = rho_suspension_Z(i);
                if (corrupt) c = corrupted_complex(std::move(c));
                reports.push_back(check_complex_Z(c, i));
            }
        } else if (cmd_maps->parsed()) {
            reports.push_back(corrupt ? check_maps(n, map_square(n), corrupted_norm(n))
                                      : check_maps(n));
            reports.push_back(check_euler_chain(n));
        } else if (cmd_theorem->parsed()) {
            if (max_degree < 8 * n) {
                std::cerr << "verify-theorem: --max-degree must be at least " << 8 * n
                          << " for n=" << n << "\n";
                return 2;
            }
            reports.push_back(corrupt ? check_main_theorem(corrupted_theorem(n), n, max_degree)
                                      : check_main_theorem(n, max_degree));
        } else if (cmd_cor->parsed()) {
            reports.push_back(check_corollary_even(n));
            reports.push_back(check_corollary_odd(n));
        } else if (cmd_all->parsed()) {
            reports = run_all(max_degree);
        }
        return emit(reports, format);
    } catch (const mackeylab::InvalidDegree& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
