#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bnlab/elliptic.hpp"
#include "bnlab/errors.hpp"
#include "bnlab/jsonio.hpp"
#include "bnlab/llschain.hpp"
#include "bnlab/moduli.hpp"
#include "bnlab/rational.hpp"
#include "bnlab/report.hpp"
#include "bnlab/schubert.hpp"
#include "bnlab/surface.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kFixture = 3;

std::vector<long long> parse_csv(const std::string& s) {
    std::vector<long long> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw bnlab::ParseError("");
        } catch (const std::exception&) {
            throw bnlab::ParseError("not an integer list: '" + s + "'");
        }
    }
    if (out.empty()) throw bnlab::ParseError("empty integer list");
    return out;
}

bnlab::NinePointFixture load_fixture(const std::string& path) {
    if (path.empty()) return bnlab::nine_point_fixture();
    std::ifstream in(path);
    if (!in) throw bnlab::InvalidFixture("cannot open fixture file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return bnlab::fixture_from_text(ss.str());
}

std::string show_entries(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

struct RhoArgs {
    long long g = 0, r = 0, d = 0;
    std::vector<std::string> alphas;
    bool json = false;
};

int run_rho(const RhoArgs& a) {
    std::vector<bnlab::SchubertIndex> ram;
    for (const auto& s : a.alphas) ram.emplace_back(a.d, parse_csv(s));
    const bnlab::BNProblem problem(a.g, a.r, a.d, std::move(ram));
    const bnlab::Int v = rho_pointed(problem);
    if (a.json) {
        bnlab::Json j;
        j["g"] = a.g;
        j["r"] = a.r;
        j["d"] = a.d;
        bnlab::Json al = bnlab::Json::array();
        for (const auto& idx : problem.ramification) al.push_back(idx.entries());
        j["alpha"] = std::move(al);
        j["rho"] = bnlab::render(v);
        std::cout << bnlab::to_text(j);
    } else {
        std::cout << bnlab::render(v) << "\n";
    }
    return kOk;
}

struct VerifyArgs {
    long long g_max = -1;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    long long g_max = 30;
    if (const char* env = std::getenv("BNLAB_GMAX")) {
        try {
            g_max = std::stoll(env);
        } catch (const std::exception&) {
            throw bnlab::ParseError("BNLAB_GMAX is not an integer: '" + std::string(env) + "'");
        }
    }
    if (a.g_max >= 0) g_max = a.g_max;
    if (g_max < 2) throw bnlab::Error("g-max must be >= 2, got " + std::to_string(g_max));
    const auto rep = bnlab::build_report(g_max);
    if (a.json)
        std::cout << bnlab::to_text(bnlab::report_to_json(rep));
    else
        std::cout << bnlab::report_to_text(rep);
    return rep.all_ok() ? kOk : kVerifyFail;
}

struct DuvalArgs {
    long long g = 1;
    std::string fixture;
    bool json = false;
};

int run_duval(const DuvalArgs& a) {
    const auto fx = load_fixture(a.fixture);
    const auto p = bnlab::p10(a.g, fx);
    if (a.json) {
        bnlab::Json j;
        j["g"] = a.g;
        j["x"] = bnlab::render(p.x());
        j["y"] = bnlab::render(p.y());
        std::cout << bnlab::to_text(j);
    } else {
        std::cout << "p10(" << a.g << ") = " << bnlab::render(p) << "\n";
    }
    return kOk;
}

struct PencilArgs {
    std::string which;
    long long g = 2;
    std::string klass;
    bool json = false;
};

int run_pencil(const PencilArgs& a) {
    bnlab::PencilNumbers p = [&] {
        if (a.which == "duval") return bnlab::duval_pencil(a.g);
        if (a.which == "iota") return bnlab::iota_pencil(a.g);
        if (a.which == "iota-bar") return bnlab::iota_bar_pencil(a.g);
        if (a.which == "k3") return bnlab::k3_pencil(a.g);
        throw bnlab::Error("unknown pencil '" + a.which + "'");
    }();
    if (a.klass.empty()) {
        if (a.json) {
            bnlab::Json j = bnlab::uc_class_to_json(p);
            bnlab::Json out;
            out["which"] = a.which;
            for (auto& [key, value] : j.items()) out[key] = std::move(value);
            std::cout << bnlab::to_text(out);
        } else {
            std::cout << "lambda = " << bnlab::render(p.lambda()) << "\n";
            std::cout << "psi = " << bnlab::render(p.psi()) << "\n";
            std::cout << "delta_irr = " << bnlab::render(p.delta_irr()) << "\n";
            for (long long i = 1; i <= a.g - 1; ++i)
                if (p.delta(i) != 0)
                    std::cout << "delta_" << i << " = " << bnlab::render(p.delta(i)) << "\n";
        }
        return kOk;
    }
    const bnlab::UCClass cls = [&] {
        if (a.klass == "bn") return bnlab::bn_class(a.g);
        if (a.klass == "weierstrass") return bnlab::weierstrass_class(a.g);
        if (a.klass == "z10") {
            if (a.g != 10) throw bnlab::Error("the z10 class lives in genus 10, got --g " +
                                              std::to_string(a.g));
            return bnlab::z10_class();
        }
        throw bnlab::Error("unknown class '" + a.klass + "'");
    }();
    const bnlab::Rat v = bnlab::pair(p, cls);
    if (a.json) {
        bnlab::Json j;
        j["which"] = a.which;
        j["g"] = a.g;
        j["class"] = a.klass;
        j["pairing"] = bnlab::render(v);
        std::cout << bnlab::to_text(j);
    } else {
        std::cout << bnlab::render(v) << "\n";
    }
    return kOk;
}

struct ChainArgs {
    long long g = 1, r = 0, d = 0;
    std::string alpha, beta;
    bool json = false;
};

int run_chain(const ChainArgs& a) {
    bnlab::SchubertIndex alpha(a.d, parse_csv(a.alpha));
    std::optional<bnlab::SchubertIndex> beta;
    if (!a.beta.empty()) beta = bnlab::SchubertIndex(a.d, parse_csv(a.beta));
    const bnlab::ChainProblem problem(a.g, a.r, a.d, std::move(alpha), std::move(beta));
    const auto res = bnlab::chain_dim(problem);
    if (a.json) {
        bnlab::Json j;
        j["g"] = a.g;
        j["r"] = a.r;
        j["d"] = a.d;
        j["alpha"] = problem.alpha.entries();
        j["beta"] = problem.beta ? bnlab::Json(problem.beta->entries()) : bnlab::Json(nullptr);
        j["dimension"] = res.dimension ? bnlab::Json(bnlab::render(*res.dimension))
                                       : bnlab::Json(nullptr);
        bnlab::Json w = bnlab::Json::array();
        for (const auto& idx : res.witness) w.push_back(idx.entries());
        j["witness"] = std::move(w);
        std::cout << bnlab::to_text(j);
    } else if (!res.dimension) {
        std::cout << "empty\n";
    } else {
        std::cout << "dimension = " << bnlab::render(*res.dimension) << "\n";
        long long level = a.g;
        for (const auto& idx : res.witness)
            std::cout << "split at genus " << level-- << ": " << show_entries(idx.entries())
                      << "\n";
    }
    return kOk;
}

struct TorsionArgs {
    std::string x, y, a, b, fixture;
    bool sum = false;
    bool json = false;
};

int run_torsion(const TorsionArgs& t) {
    std::optional<bnlab::EllipticCurveQ> curve;
    bnlab::RationalPoint point;
    if (t.sum) {
        const auto fx = load_fixture(t.fixture);
        curve = fx.curve;
        bnlab::RationalPoint s = bnlab::RationalPoint::infinity();
        for (const auto& p : fx.points) s = fx.curve.add(s, p);
        point = s;
    } else {
        if (t.x.empty() || t.y.empty())
            throw bnlab::ParseError("torsion needs --x and --y (or --sum)");
        if (!t.a.empty() || !t.b.empty()) {
            if (t.a.empty() || t.b.empty())
                throw bnlab::ParseError("curve override needs both --a and --b");
            curve = bnlab::EllipticCurveQ(bnlab::parse_rat(t.a), bnlab::parse_rat(t.b));
        } else {
            curve = load_fixture(t.fixture).curve;
        }
        point = bnlab::RationalPoint(bnlab::parse_rat(t.x), bnlab::parse_rat(t.y));
    }
    const auto order = curve->torsion_order(point);
    if (t.json) {
        bnlab::Json j;
        j["point"] = bnlab::Json::array({bnlab::render(point.x()), bnlab::render(point.y())});
        j["order"] = order ? bnlab::Json(*order) : bnlab::Json(nullptr);
        std::cout << bnlab::to_text(j);
    } else if (order) {
        std::cout << "order = " << *order << "\n";
    } else {
        std::cout << "non-torsion\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pointed Brill-Noether arithmetic: Du Val pencils, elliptic chains, "
                 "surface lattices and moduli pairings"};
    app.require_subcommand(1);

    RhoArgs rho_args;
    auto* rho_cmd = app.add_subcommand("rho", "pointed Brill-Noether number");
    rho_cmd->add_option("--g", rho_args.g, "genus")->required();
    rho_cmd->add_option("--r", rho_args.r, "projective dimension of the series")->required();
    rho_cmd->add_option("--d", rho_args.d, "degree of the series")->required();
    rho_cmd->add_option("--alpha", rho_args.alphas,
                        "ramification index as a comma list, repeatable per marked point");
    rho_cmd->add_flag("--json", rho_args.json, "JSON output");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify-paper", "recompute the catalogued claims");
    verify_cmd->add_option("--g-max", verify_args.g_max,
                           "largest genus for the sweep claims (default 30, env BNLAB_GMAX)");
    verify_cmd->add_flag("--json", verify_args.json, "JSON report");

    DuvalArgs duval_args;
    auto* duval_cmd = app.add_subcommand("duval", "tenth point of the genus-g Du Val configuration");
    duval_cmd->add_option("--g", duval_args.g, "genus, at least 1")->required();
    duval_cmd->add_option("--fixture", duval_args.fixture, "fixture JSON file (default built in)");
    duval_cmd->add_flag("--json", duval_args.json, "JSON output");

    PencilArgs pencil_args;
    auto* pencil_cmd = app.add_subcommand("pencil", "family degrees and moduli pairings");
    pencil_cmd->add_option("--which", pencil_args.which, "duval, iota, iota-bar or k3")->required();
    pencil_cmd->add_option("--g", pencil_args.g, "genus, at least 2")->required();
    pencil_cmd->add_option("--class", pencil_args.klass, "pair against: bn, weierstrass or z10");
    pencil_cmd->add_flag("--json", pencil_args.json, "JSON output");

    ChainArgs chain_args;
    auto* chain_cmd = app.add_subcommand("chain", "two-point problem on a chain of elliptic bridges");
    chain_cmd->add_option("--g", chain_args.g, "number of bridges")->required();
    chain_cmd->add_option("--r", chain_args.r, "projective dimension of the series")->required();
    chain_cmd->add_option("--d", chain_args.d, "degree of the series")->required();
    chain_cmd->add_option("--alpha", chain_args.alpha, "index at the first point")->required();
    chain_cmd->add_option("--beta", chain_args.beta, "index at the last point (default trivial)");
    chain_cmd->add_flag("--json", chain_args.json, "JSON output");

    TorsionArgs torsion_args;
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion order of a rational point");
    torsion_cmd->add_option("--x", torsion_args.x, "x coordinate, as n or n/d");
    torsion_cmd->add_option("--y", torsion_args.y, "y coordinate, as n or n/d");
    torsion_cmd->add_option("--a", torsion_args.a, "curve coefficient a (with --b)");
    torsion_cmd->add_option("--b", torsion_args.b, "curve coefficient b (with --a)");
    torsion_cmd->add_option("--fixture", torsion_args.fixture, "fixture JSON file for the curve");
    torsion_cmd->add_flag("--sum", torsion_args.sum, "test the sum of the nine fixture points");
    torsion_cmd->add_flag("--json", torsion_args.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (rho_cmd->parsed()) return run_rho(rho_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (duval_cmd->parsed()) return run_duval(duval_args);
        if (pencil_cmd->parsed()) return run_pencil(pencil_args);
        if (chain_cmd->parsed()) return run_chain(chain_args);
        if (torsion_cmd->parsed()) return run_torsion(torsion_args);
    } catch (const bnlab::InvalidFixture& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kFixture;
    } catch (const bnlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
