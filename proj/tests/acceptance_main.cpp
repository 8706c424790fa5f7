// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria. argv[1] must be the path to the locstate CLI binary
// (used by the determinism criterion); argv[2] optionally overrides the
// scratch directory.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "locstate/diffraction.hpp"
#include "locstate/freestate.hpp"
#include "locstate/numerics.hpp"
#include "locstate/potentialstate.hpp"
#include "support/oracles.hpp"

using locstate::Complex;
using locstate::SlitSpec;
namespace fs = locstate::freestate;
namespace ps = locstate::potentialstate;
namespace df = locstate::diffraction;
namespace stdfs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Harness {
    int failures = 0;

    void report(int id, const char* title, bool ok, const std::string& detail) {
        std::printf("%s criterion %2d: %s — %s\n", ok ? "PASS" : "FAIL", id, title,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }

    template <typename Fn>
    void criterion(int id, const char* title, Fn&& fn) {
        try {
            auto [ok, detail] = fn();
            report(id, title, ok, detail);
        } catch (const std::exception& e) {
            report(id, title, false, std::string("exception: ") + e.what());
        }
    }
};

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

// ---- criterion 1: the four published Fresnel numbers ----------------------
std::pair<bool, std::string> fresnel_numbers() {
    const SlitSpec slit(0.1, 0.0);
    const double n1 = df::fresnel_number(slit, 0.0005);
    const double n2 = df::fresnel_number(slit, 0.00075);
    const double n3 = df::fresnel_number(slit, 0.001);
    const double n4 = df::fresnel_number(slit, 0.01);
    // first three rounded to the printed 3 decimals; the last one was
    // printed truncated (1/(8 pi) = 0.0398 -> "0.039")
    const bool ok = std::round(n1 * 1000.0) == 796.0 && std::round(n2 * 1000.0) == 531.0 &&
                    std::round(n3 * 1000.0) == 398.0 && std::floor(n4 * 1000.0) == 39.0;
    return {ok, fmt("computed {%.4f, %.4f, %.4f, %.4f} vs published {0.796, 0.531, 0.398, 0.039}",
                    n1, n2, n3, n4)};
}

// ---- criterion 2: rectangle recovery ---------------------------------------
std::pair<bool, std::string> rectangle_recovery() {
    const SlitSpec slit(0.1, 0.0);
    // limit evaluator at t = 0: |Psi|^2 = 1/a inside the slit exactly
    bool exact = true;
    for (double y : {-0.05, -0.02, 0.0, 0.03, 0.05}) {
        const double d = std::norm(fs::evaluate_limit(slit, y, 0.0));
        if (std::abs(d - 10.0) > 1e-14 * 10.0) exact = false;
    }

    // truncated evaluator at k_m = 1e5, relative L2 over [-a, a] vs the
    // rectangle; integrated piecewise so the rectangle's jumps sit on panel
    // boundaries
    const fs::FreeLocationState state(slit, 1e5);
    auto gap = [&](double y) {
        return std::norm(fs::evaluate_truncated(state, y, 0.0) - fs::rectangular_state(slit, y));
    };
    const double l2sq = oracles::simpson(gap, -0.1, -0.05, 1 << 15) +
                        oracles::simpson(gap, -0.05, 0.05, 1 << 16) +
                        oracles::simpson(gap, 0.05, 0.1, 1 << 15);
    const double l2 = std::sqrt(l2sq);  // rectangle norm over [-a, a] is 1
    const bool ok = exact && l2 <= 0.01;
    return {ok, fmt("t=0 plateau %s; relative L2 at k_m=1e5: %.4f (<= 0.01)",
                    exact ? "exact" : "WRONG", l2)};
}

// ---- criterion 3: order-swap evaluator vs brute-force quadrature ----------
std::pair<bool, std::string> oracle_equivalence() {
    const SlitSpec slit(0.1, 0.0);
    const double km = 200.0, t = 1e-3, beta = 0.5 * t;
    const fs::FreeLocationState state(slit, km);

    // independent two-level composite Simpson of the double integral; the
    // inner slit integral depends only on k, so it is tabulated once
    const int nk = 1 << 13, ny = 1 << 8;
    std::vector<Complex> inner(static_cast<std::size_t>(nk) + 1);
    const double hk = 2.0 * km / nk;
    for (int i = 0; i <= nk; ++i) {
        const double k = -km + hk * i;
        inner[static_cast<std::size_t>(i)] = oracles::simpson(
            [&](double yp) { return std::exp(Complex(0.0, -k * yp)); }, -0.05, 0.05, ny);
    }
    const auto brute = [&](double y) {
        Complex acc = inner.front() * std::exp(Complex(0.0, -km * y - beta * km * km)) +
                      inner.back() * std::exp(Complex(0.0, km * y - beta * km * km));
        for (int i = 1; i < nk; ++i) {
            const double k = -km + hk * i;
            acc += inner[static_cast<std::size_t>(i)] *
                   std::exp(Complex(0.0, k * y - beta * k * k)) * ((i % 2 == 1) ? 4.0 : 2.0);
        }
        return acc * (hk / 3.0) / (2.0 * kPi * std::sqrt(0.1));
    };

    double scale = 0.0, worst = 0.0;
    std::vector<Complex> oracle(101);
    for (int i = 0; i <= 100; ++i) {
        oracle[static_cast<std::size_t>(i)] = brute(-0.2 + 0.004 * i);
        scale = std::max(scale, std::abs(oracle[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i <= 100; ++i) {
        const Complex mine = fs::evaluate_truncated(state, -0.2 + 0.004 * i, t);
        worst = std::max(worst, std::abs(mine - oracle[static_cast<std::size_t>(i)]) / scale);
    }
    return {worst <= 1e-8, fmt("max relative error %.3e over 101 points (<= 1e-8)", worst)};
}

// ---- criterion 4: unitarity -------------------------------------------------
std::pair<bool, std::string> unitarity() {
    const SlitSpec slit(0.1, 0.0);
    const fs::FreeLocationState state(slit, 200.0);
    double lo_free = 1e300, hi_free = 0.0;
    for (double t : {0.0, 1e-5, 1e-4, 1e-3, 1e-2}) {
        const double norm = oracles::simpson(
            [&](double y) { return std::norm(fs::evaluate_truncated(state, y, t)); }, -25.0, 25.0,
            120000);
        lo_free = std::min(lo_free, norm);
        hi_free = std::max(hi_free, norm);
    }
    const double drift_free = (hi_free - lo_free) / hi_free;

    const auto osc = ps::project_coefficients(ps::OscillatorBasis(1.0, 250), SlitSpec(2.0, 10.0));
    double lo_osc = 1e300, hi_osc = 0.0;
    for (double t : {0.0, 0.4, kPi, 2.0 * kPi + 0.3}) {
        const double norm = oracles::simpson(
            [&](double y) { return std::norm(ps::evolve(osc, y, t)); }, -26.0, 26.0, 24000);
        lo_osc = std::min(lo_osc, norm);
        hi_osc = std::max(hi_osc, norm);
    }
    const double drift_osc = (hi_osc - lo_osc) / hi_osc;

    const bool ok = drift_free <= 1e-6 && drift_osc <= 1e-6;
    return {ok, fmt("relative norm drift: free %.2e, oscillator %.2e (<= 1e-6)", drift_free,
                    drift_osc)};
}

// ---- criterion 5: Fraunhofer convergence/divergence ------------------------
std::pair<bool, std::string> fraunhofer_convergence() {
    const SlitSpec slit(0.1, 0.0);
    const auto linf_over_peak = [&](double t) {
        const auto grid = fs::default_grid(slit, t);
        const auto observed = df::product_density_at_time(slit, t, grid);
        const auto reference = df::fraunhofer_mapped_reference(slit, t, grid);
        const auto report =
            df::compare_patterns(observed, reference, df::fresnel_number(slit, t));
        const double peak = *std::max_element(reference.density.begin(), reference.density.end());
        return report.linf_distance / peak;
    };
    const double far = linf_over_peak(0.01);   // N_F = 0.039
    const double near = linf_over_peak(0.001); // N_F = 0.398
    const bool ok = far <= 0.02 && near >= 0.10;
    return {ok, fmt("Linf/peak: %.4f at N_F=0.039 (<= 0.02), %.4f at N_F=0.398 (>= 0.10)", far,
                    near)};
}

// ---- criterion 6: oscillator revival and mirror ----------------------------
std::pair<bool, std::string> revival_and_mirror() {
    const auto state = ps::project_coefficients(ps::OscillatorBasis(1.0, 250), SlitSpec(2.0, 10.0));
    const double t0 = 0.7;
    double sup_revival = 0.0, sup_mirror = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double y = -24.0 + 0.048 * i;
        const double now = std::norm(ps::evolve(state, y, t0));
        const double revived = std::norm(ps::evolve(state, y, t0 + 2.0 * kPi));
        const double mirrored = std::norm(ps::evolve(state, -y, t0 + kPi));
        sup_revival = std::max(sup_revival, std::abs(revived - now));
        sup_mirror = std::max(sup_mirror, std::abs(mirrored - now));
    }
    const bool ok = sup_revival <= 1e-9 && sup_mirror <= 1e-9;
    return {ok, fmt("sup-norm: revival %.2e, mirror %.2e (<= 1e-9)", sup_revival, sup_mirror)};
}

// ---- criterion 7: Parseval capture ------------------------------------------
std::pair<bool, std::string> parseval_capture() {
    const auto state = ps::project_coefficients(ps::OscillatorBasis(1.0, 250), SlitSpec(2.0, 10.0));
    const double capture = ps::captured_norm(state);
    double tail = 0.0;
    for (std::size_t n = 201; n < state.coefficients.size(); ++n)
        tail += state.coefficients[n] * state.coefficients[n];
    const bool ok = capture >= 0.999 && tail < 1e-4;
    return {ok, fmt("sum c_n^2 = %.6f (>= 0.999 required), tail(n>200) = %.3e (< 1e-4 required)",
                    capture, tail)};
}

// ---- criterion 8: mean-energy growth ----------------------------------------
std::pair<bool, std::string> mean_energy_growth() {
    const SlitSpec slit(0.1, 0.0);
    const double e3 = fs::mean_energy(fs::FreeLocationState(slit, 1e3));
    const double e4 = fs::mean_energy(fs::FreeLocationState(slit, 1e4));
    const double e5 = fs::mean_energy(fs::FreeLocationState(slit, 1e5));
    const bool growth = e5 > e4 && e4 > e3;
    const bool ratio = std::abs(e4 / e3 - 10.0) <= 0.5 && std::abs(e5 / e4 - 10.0) <= 0.5;
    return {growth && ratio,
            fmt("<E> = {%.1f, %.1f, %.1f}, decade ratios {%.3f, %.3f} (within 10 +- 0.5)", e3, e4,
                e5, e4 / e3, e5 / e4)};
}

// ---- criterion 9: dBB equivariance -------------------------------------------
std::pair<bool, std::string> equivariance() {
    const SlitSpec slit(0.1, 0.0);
    const double flight_time = 0.01;
    const int count = 10000;
    const auto endpoints = df::trajectory_endpoints(slit, flight_time, count);

    const double lo = -1.9, hi = 1.9;
    const int interior = 38;
    std::vector<double> observed(static_cast<std::size_t>(interior) + 2, 0.0);
    for (double y : endpoints) {
        if (y < lo)
            ++observed.front();
        else if (y >= hi)
            ++observed.back();
        else
            ++observed[1 + static_cast<std::size_t>((y - lo) / (hi - lo) * interior)];
    }
    std::vector<double> expected(observed.size(), 0.0);
    double covered = 0.0;
    for (int b = 0; b < interior; ++b) {
        const double left = lo + (hi - lo) * b / interior;
        const double right = lo + (hi - lo) * (b + 1) / interior;
        const double mass = oracles::simpson(
            [&](double y) { return std::norm(fs::evaluate_limit(slit, y, flight_time)); }, left,
            right, 1024);
        expected[1 + static_cast<std::size_t>(b)] = count * mass;
        covered += mass;
    }
    expected.front() = expected.back() = count * 0.5 * (1.0 - covered);

    // pool skinny bins (pattern minima) so every cell has expectation >= 5
    double chi2 = 0.0, pooled_obs = 0.0, pooled_exp = 0.0;
    int cells = 0;
    for (std::size_t b = 0; b < expected.size(); ++b) {
        pooled_obs += observed[b];
        pooled_exp += expected[b];
        if (pooled_exp >= 5.0) {
            chi2 += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
            pooled_obs = pooled_exp = 0.0;
            ++cells;
        }
    }
    const int dof = cells - 1;
    const double critical = oracles::chi_square_critical(dof, oracles::kZ99);
    return {chi2 < critical,
            fmt("chi-square %.2f vs critical %.2f at 1%% (dof %d, %d trajectories)", chi2,
                critical, dof, count)};
}

// ---- criterion 10: preset determinism ----------------------------------------
struct RunResult {
    int exit_code = -1;
    std::map<std::string, std::string> files;  // name -> bytes
};

RunResult run_preset(const std::string& binary, const stdfs::path& dir, const std::string& preset,
                     int threads) {
    stdfs::create_directories(dir);
    std::ostringstream command;
    command << "cd " << dir << " && LOCSTATE_THREADS=" << threads << " " << binary << " --preset "
            << preset << " > /dev/null 2>&1";
    RunResult result;
    result.exit_code = std::system(command.str().c_str());
    for (const auto& entry : stdfs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        result.files[entry.path().filename().string()] = buffer.str();
    }
    return result;
}

std::pair<bool, std::string> determinism(const std::string& binary, const stdfs::path& scratch) {
    int compared = 0;
    for (const std::string preset : {"fig2", "fig3", "fig4"}) {
        const auto base = scratch / preset;
        const auto first = run_preset(binary, base / "run1", preset, 4);
        const auto second = run_preset(binary, base / "run2", preset, 4);
        const auto single = run_preset(binary, base / "run_single_thread", preset, 1);
        if (first.exit_code != 0 || second.exit_code != 0 || single.exit_code != 0)
            return {false, fmt("%s: nonzero exit from the CLI", preset.c_str())};
        if (first.files.empty()) return {false, fmt("%s: no artifacts written", preset.c_str())};
        if (first.files != second.files)
            return {false, fmt("%s: bytes differ between identical runs", preset.c_str())};
        if (first.files != single.files)
            return {false, fmt("%s: bytes differ between 1-thread and 4-thread runs",
                               preset.c_str())};
        compared += static_cast<int>(first.files.size());
    }
    return {true, fmt("%d artifacts byte-identical across reruns and thread counts", compared)};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-locstate-binary> [scratch-dir]\n", argv[0]);
        return 64;
    }
    const std::string binary = stdfs::absolute(argv[1]).string();
    const stdfs::path scratch =
        argc > 2 ? stdfs::path(argv[2]) : stdfs::temp_directory_path() / "locstate_acceptance";
    stdfs::remove_all(scratch);
    stdfs::create_directories(scratch);

    Harness harness;
    harness.criterion(1, "Fresnel numbers", fresnel_numbers);
    harness.criterion(2, "rectangle recovery", rectangle_recovery);
    harness.criterion(3, "oracle equivalence", oracle_equivalence);
    harness.criterion(4, "unitarity", unitarity);
    harness.criterion(5, "Fraunhofer convergence", fraunhofer_convergence);
    harness.criterion(6, "oscillator revival and mirror", revival_and_mirror);
    harness.criterion(7, "Parseval capture", parseval_capture);
    harness.criterion(8, "mean-energy growth", mean_energy_growth);
    harness.criterion(9, "dBB equivariance", equivariance);
    harness.criterion(10, "preset determinism",
                      [&] { return determinism(binary, scratch); });

    if (harness.failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criterion(s) failed\n", harness.failures);
    return harness.failures;
}
