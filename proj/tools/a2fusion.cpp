#include "a2/bmw.hpp"
#include "a2/fusion.hpp"
#include "a2/io_json.hpp"
#include "a2/multiplicity.hpp"
#include "a2/symbolic.hpp"
#include "a2/tensor.hpp"
#include "a2/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace a2;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("'" + s + "' is not an integer");
    }
}

Weight parse_weight(const std::string& x, const std::string& y) {
    return Weight{parse_int(x), parse_int(y)};
}

Level parse_level(const std::string& s) {
    Int v = parse_int(s);
    if (v < 0) throw CLI::ValidationError("level must be nonnegative");
    return Level{v};
}

void print_weight_table(const WeightDiagram& wd) {
    size_t width = 0;
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [w, m] : wd.entries) {
        std::string ws = "(" + to_string(w.x) + "," + to_string(w.y) + ")";
        width = std::max(width, ws.size());
        rows.emplace_back(std::move(ws), to_string(m));
    }
    std::string head = "weight";
    width = std::max(width, head.size());
    std::cout << head << std::string(width - head.size() + 2, ' ') << "mult\n";
    for (const auto& [ws, ms] : rows)
        std::cout << ws << std::string(width - ws.size() + 2, ' ') << ms << "\n";
}

void print_coefficient_table(const CoefficientTable& table) {
    size_t width = 0;
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [nu, n] : table.entries) {
        std::string ns = "(" + to_string(nu.x) + "," + to_string(nu.y) + ")";
        width = std::max(width, ns.size());
        rows.emplace_back(std::move(ns), to_string(n));
    }
    std::string head = "nu";
    width = std::max(width, head.size());
    std::cout << head << std::string(width - head.size() + 2, ' ') << "N\n";
    for (const auto& [ns, n] : rows)
        std::cout << ns << std::string(width - ns.size() + 2, ' ') << n << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact A2 tensor and fusion coefficients: Racah-Speiser, Kac-Walton,"
                 " the closed Begin-Mathieu-Walton formula, and its symbolic re-derivation"};
    app.require_subcommand(1);

    // mult A B X Y
    std::vector<std::string> margs(4);
    auto* cmd_mult = app.add_subcommand("mult", "Multiplicity of (X,Y) in V((A,B))");
    cmd_mult->add_option("A", margs[0])->required();
    cmd_mult->add_option("B", margs[1])->required();
    cmd_mult->add_option("X", margs[2])->required();
    cmd_mult->add_option("Y", margs[3])->required();

    // weights A B [--json]
    std::vector<std::string> wargs(2);
    bool wjson = false;
    auto* cmd_weights = app.add_subcommand("weights", "Weight diagram of V((A,B))");
    cmd_weights->add_option("A", wargs[0])->required();
    cmd_weights->add_option("B", wargs[1])->required();
    cmd_weights->add_flag("--json", wjson, "emit JSON");

    // tensor A B C D [--nu E F] [--json]
    std::vector<std::string> targs(4);
    std::vector<std::string> tnu;
    bool tjson = false;
    auto* cmd_tensor = app.add_subcommand("tensor", "Tensor product decomposition (Racah-Speiser)");
    cmd_tensor->add_option("A", targs[0])->required();
    cmd_tensor->add_option("B", targs[1])->required();
    cmd_tensor->add_option("C", targs[2])->required();
    cmd_tensor->add_option("D", targs[3])->required();
    cmd_tensor->add_option("--nu", tnu, "single coefficient for nu = (E,F)")->expected(2);
    cmd_tensor->add_flag("--json", tjson, "emit JSON");

    // fuse A B C D --level L [--nu E F] [--json] [--mode fold|alcoves]
    std::vector<std::string> fargs(4);
    std::vector<std::string> fnu;
    std::string flevel, fmode = "fold";
    bool fjson = false;
    auto* cmd_fuse = app.add_subcommand("fuse", "Fusion decomposition (Kac-Walton)");
    cmd_fuse->add_option("A", fargs[0])->required();
    cmd_fuse->add_option("B", fargs[1])->required();
    cmd_fuse->add_option("C", fargs[2])->required();
    cmd_fuse->add_option("D", fargs[3])->required();
    cmd_fuse->add_option("--level", flevel, "fusion level")->required();
    cmd_fuse->add_option("--nu", fnu, "single coefficient for nu = (E,F)")->expected(2);
    cmd_fuse->add_flag("--json", fjson, "emit JSON");
    cmd_fuse->add_option("--mode", fmode, "fold | alcoves")
        ->check(CLI::IsMember({"fold", "alcoves"}));

    // bmw A B C D E F --level L [--explain]
    std::vector<std::string> bargs(6);
    std::string blevel;
    bool bexplain = false;
    auto* cmd_bmw = app.add_subcommand("bmw", "Closed-formula fusion coefficient");
    for (int i = 0; i < 6; ++i)
        cmd_bmw->add_option(std::string(1, static_cast<char>('A' + i)), bargs[static_cast<size_t>(i)])
            ->required();
    cmd_bmw->add_option("--level", blevel, "fusion level")->required();
    cmd_bmw->add_flag("--explain", bexplain, "emit intermediates as JSON");

    // verify --max-level L [--jobs N]
    std::string vlevel;
    int vjobs = 1;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Exhaustive Kac-Walton vs closed-formula sweep over all levels <= L");
    cmd_verify->add_option("--max-level", vlevel, "largest level to sweep")->required();
    cmd_verify->add_option("--jobs", vjobs, "worker threads (output independent of this)");

    // prove [--emit-cones PATH] [--emit-certificate PATH]
    std::string cones_path, cert_path;
    auto* cmd_prove = app.add_subcommand(
        "prove", "Symbolically evaluate Kac-Walton and compare with the closed formula");
    cmd_prove->add_option("--emit-cones", cones_path, "write the final cone set as JSON");
    cmd_prove->add_option("--emit-certificate", cert_path, "write the plain-text certificate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? 0 : 2;
    }

    if (cmd_mult->parsed()) {
        std::cout << mult(parse_weight(margs[0], margs[1]), parse_weight(margs[2], margs[3]))
                  << "\n";
        return 0;
    }
    if (cmd_weights->parsed()) {
        WeightDiagram wd = weight_diagram(parse_weight(wargs[0], wargs[1]));
        if (wjson) std::cout << json_of(wd).dump(2) << "\n";
        else print_weight_table(wd);
        return 0;
    }
    if (cmd_tensor->parsed()) {
        Weight la = parse_weight(targs[0], targs[1]), mu = parse_weight(targs[2], targs[3]);
        if (!tnu.empty()) {
            Weight nu = parse_weight(tnu[0], tnu[1]);
            Int n = tensor_coefficient(la, mu, nu);
            if (tjson)
                std::cout << nlohmann::json{{"nu", {json_of(nu.x), json_of(nu.y)}},
                                            {"N", json_of(n)}}
                                 .dump(2)
                          << "\n";
            else std::cout << n << "\n";
        } else {
            CoefficientTable t = tensor_decomposition(la, mu);
            if (tjson) std::cout << json_of(t).dump(2) << "\n";
            else print_coefficient_table(t);
        }
        return 0;
    }
    if (cmd_fuse->parsed()) {
        Weight la = parse_weight(fargs[0], fargs[1]), mu = parse_weight(fargs[2], fargs[3]);
        Level ell = parse_level(flevel);
        FusionMode mode = fmode == "fold" ? FusionMode::folding : FusionMode::alcoves;
        if (!fnu.empty()) {
            Weight nu = parse_weight(fnu[0], fnu[1]);
            Int n = fusion_coefficient({la, mu, nu, ell}, mode);
            if (fjson)
                std::cout << nlohmann::json{{"level", json_of(ell.value)},
                                            {"nu", {json_of(nu.x), json_of(nu.y)}},
                                            {"N", json_of(n)}}
                                 .dump(2)
                          << "\n";
            else std::cout << n << "\n";
        } else {
            CoefficientTable t = fusion_decomposition(la, mu, ell, mode);
            if (fjson) std::cout << fusion_json(t, ell).dump(2) << "\n";
            else print_coefficient_table(t);
        }
        return 0;
    }
    if (cmd_bmw->parsed()) {
        Weight la = parse_weight(bargs[0], bargs[1]);
        Weight mu = parse_weight(bargs[2], bargs[3]);
        Weight nu = parse_weight(bargs[4], bargs[5]);
        Level ell = parse_level(blevel);
        Int n = bmw_fusion(la, mu, nu, ell);
        if (bexplain)
            std::cout << explain_json(bmw_intermediates(la, mu, nu, ell), n).dump(2) << "\n";
        else std::cout << n << "\n";
        return 0;
    }
    if (cmd_verify->parsed()) {
        Int max_level = parse_int(vlevel);
        if (max_level < 0) throw CLI::ValidationError("--max-level must be nonnegative");
        SweepResult r = verify_sweep(max_level, vjobs);
        std::cout << "levels 0.." << max_level << ": " << r.pairs << " pairs, " << r.triples
                  << " triples\n";
        auto report = [&](const char* what, const std::vector<SweepMismatch>& ms) {
            if (ms.empty()) {
                std::cout << what << ": ok\n";
                return false;
            }
            const SweepMismatch& m = ms.front();
            std::cout << what << ": " << ms.size() << " mismatches; first at level "
                      << m.level << ", lambda=(" << m.lambda.x << "," << m.lambda.y << "), mu=("
                      << m.mu.x << "," << m.mu.y << "), nu=(" << m.nu.x << "," << m.nu.y
                      << "): " << m.detail << "\n";
            return true;
        };
        bool bad = false;
        bad |= report("folding vs alcove mode", r.mode_mismatches);
        bad |= report("kac-walton vs closed formula", r.bmw_mismatches);
        bad |= report("properties", r.property_mismatches);
        return bad ? 1 : 0;
    }
    if (cmd_prove->parsed()) {
        SymbolicFusionResult kw =
            symbolic_kac_walton([](const std::string& msg) { std::cerr << msg << "\n"; });
        ConeSupportedExpressionSet closed = bmw_symbolic();
        EquivalenceReport report = compare_piecewise(kw.pieces, closed);
        std::cout << "kac-walton pieces: " << kw.pieces.pieces.size() << " (" << kw.nonzero_count
                  << " nonzero, " << kw.zero_count << " zero)\n";
        std::cout << "closed-formula pieces: " << closed.pieces.size() << " ("
                  << closed.nonzero_count() << " nonzero, " << closed.zero_count() << " zero)\n";
        std::cout << "equivalent: " << (report.equivalent ? "yes" : "NO") << "\n";
        if (!cones_path.empty()) {
            std::ofstream out(cones_path);
            if (!out) throw CLI::ValidationError("cannot write " + cones_path);
            out << json_of(kw.pieces).dump(2) << "\n";
        }
        if (!cert_path.empty()) {
            std::ofstream out(cert_path);
            if (!out) throw CLI::ValidationError("cannot write " + cert_path);
            out << proof_certificate(kw, closed, report);
        }
        return report.equivalent ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
