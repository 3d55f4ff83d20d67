#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "hookring/hook_generation.hpp"
#include "hookring/littlewood_richardson.hpp"
#include "hookring/reflection_groups.hpp"

using json = nlohmann::ordered_json;
using namespace hookring;

namespace {

json partition_json(const Partition& p) { return json(p.parts()); }

json vc_json(const VirtualCharacter& v) {
    json terms = json::array();
    for (const auto& [label, c] : v.coeffs)
        terms.push_back({{"label", partition_json(label)}, {"coeff", c}});
    return terms;
}

json expression_json(const HookExpression& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms) {
        json mono = json::object();
        for (const auto& [k, exp] : m) mono[std::to_string(k)] = exp;
        terms.push_back({{"monomial", mono}, {"coeff", c}});
    }
    return terms;
}

json generation_json(const GenerationReport& r) {
    json out;
    out["full"] = r.full;
    out["rank"] = r.rank;
    if (r.index >= 0) out["index"] = r.index;
    else out["index"] = nullptr;
    out["iterations"] = r.iterations;
    return out;
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_file);
        f << text << "\n";
    }
}

struct GroupSpec {
    std::string kind; // sym | b | g12
    int param = 0;
};

GroupSpec parse_group(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--group", "expected kind:param, e.g. sym:8");
    GroupSpec g;
    g.kind = text.substr(0, colon);
    g.param = std::stoi(text.substr(colon + 1));
    if (g.kind != "sym" && g.kind != "b" && g.kind != "g12")
        throw CLI::ValidationError("--group", "kind must be sym, b or g12");
    return g;
}

GenerationReport to_report(const SaturationResult& sat) {
    GenerationReport r;
    r.full = is_full(sat.lattice);
    r.rank = sat.lattice.rank();
    r.index = lattice_index(sat.lattice);
    r.iterations = sat.iterations;
    return r;
}

RingData sym_ring_data(const SymRing& ring) {
    RingData data;
    for (const auto& l : ring.table().labels()) data.label_names.push_back(l.to_string());
    data.unit = 0; // [n] is first in reverse-lex order
    data.multiply_basis = [&ring](int i, int j) {
        const auto& labels = ring.table().labels();
        IntVector out = IntVector::Zero(static_cast<int>(labels.size()));
        for (const auto& [nu, c] : ring.kronecker_basis(labels[i], labels[j]).coeffs)
            out[ring.table().index_of(nu)] = c;
        return out;
    };
    return data;
}

int run_verify_all(int sym_max, int b_max, int g12_max, const std::string& format,
                   const std::string& out_file);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in representation rings of S_n, G(d,1,2) and B_n"};
    app.require_subcommand(1);
    std::string format = "human";
    std::string out_file;
    app.add_option("--format", format, "Output format: human|json|csv")->capture_default_str();
    app.add_option("--out", out_file, "Write output to FILE instead of stdout");

    // table
    auto* cmd_table = app.add_subcommand("table", "Character table of S_n");
    int table_n = 0;
    cmd_table->add_option("--n", table_n, "Symmetric group size")->required();

    // kron
    auto* cmd_kron = app.add_subcommand("kron", "Kronecker product of two irreducibles");
    int kron_n = 0;
    std::string kron_lambda, kron_mu;
    cmd_kron->add_option("--n", kron_n, "Symmetric group size")->required();
    cmd_kron->add_option("--lambda", kron_lambda)->required();
    cmd_kron->add_option("--mu", kron_mu)->required();

    // lr
    auto* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    std::string lr_lambda, lr_mu, lr_nu;
    bool lr_list = false;
    cmd_lr->add_option("--lambda", lr_lambda)->required();
    cmd_lr->add_option("--mu", lr_mu)->required();
    cmd_lr->add_option("--nu", lr_nu)->required();
    cmd_lr->add_flag("--list", lr_list, "List the expansions");

    // dvir
    auto* cmd_dvir = app.add_subcommand("dvir", "Exhaustive Kronecker-vs-LR agreement sweep");
    int dvir_n = 0;
    cmd_dvir->add_option("--n", dvir_n)->required();

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "Express an irreducible in the hooks E_0..E_{n-1}");
    int dec_n = 0;
    std::string dec_lambda;
    bool dec_verify = false;
    cmd_dec->add_option("--n", dec_n)->required();
    cmd_dec->add_option("--lambda", dec_lambda)->required();
    cmd_dec->add_flag("--verify", dec_verify, "Re-evaluate the expression against the character");

    // generate
    auto* cmd_gen = app.add_subcommand("generate", "Saturation-based generation check");
    std::string gen_group, gen_set = "hooks";
    cmd_gen->add_option("--group", gen_group, "sym:n | b:n | g12:d")->required();
    cmd_gen->add_option("--set", gen_set, "hooks | hooks+u | v+linear | linear");

    // bn
    auto* cmd_bn = app.add_subcommand("bn", "Hyperoctahedral group experiments");
    int bn_n = 0;
    bool bn_exp = false;
    cmd_bn->add_option("--n", bn_n)->required();
    cmd_bn->add_flag("--experiments", bn_exp, "Run the hooks-only and hooks+U generation checks");

    // g12
    auto* cmd_g12 = app.add_subcommand("g12", "G(d,1,2) experiments");
    int g12_d = 0;
    bool g12_check = false;
    cmd_g12->add_option("--d", g12_d)->required();
    cmd_g12->add_flag("--check", g12_check, "Run the V + linear generation check");

    // verify-all
    auto* cmd_all = app.add_subcommand("verify-all", "Reproduce every desk-scale check");
    int sym_max = 8, b_max = 5, g12_max = 8;
    cmd_all->add_option("--sym-max", sym_max)->capture_default_str();
    cmd_all->add_option("--b-max", b_max)->capture_default_str();
    cmd_all->add_option("--g12-max", g12_max)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_table) {
            SymRing ring(table_n);
            const auto& t = ring.table();
            int m = static_cast<int>(t.labels().size());
            if (format == "json") {
                json out;
                out["n"] = table_n;
                out["classes"] = json::array();
                for (int c = 0; c < m; ++c)
                    out["classes"].push_back({{"cycle_type", partition_json(t.labels()[c])},
                                              {"size", t.class_size(c)},
                                              {"centralizer", t.centralizer(c)}});
                out["rows"] = json::array();
                for (int r = 0; r < m; ++r) {
                    std::vector<Int> vals;
                    for (int c = 0; c < m; ++c) vals.push_back(t.entry(r, c));
                    out["rows"].push_back({{"label", partition_json(t.labels()[r])}, {"values", vals}});
                }
                emit(out.dump(2), out_file);
            } else if (format == "csv") {
                std::ostringstream os;
                os << "label";
                for (int c = 0; c < m; ++c) os << "," << "\"" << t.labels()[c].to_string() << "\"";
                os << "\nclass_size";
                for (int c = 0; c < m; ++c) os << "," << t.class_size(c);
                for (int r = 0; r < m; ++r) {
                    os << "\n\"" << t.labels()[r].to_string() << "\"";
                    for (int c = 0; c < m; ++c) os << "," << t.entry(r, c);
                }
                emit(os.str(), out_file);
            } else {
                std::ostringstream os;
                for (int r = 0; r < m; ++r) {
                    os << t.labels()[r].to_string() << ":";
                    for (int c = 0; c < m; ++c) os << " " << t.entry(r, c);
                    if (r + 1 < m) os << "\n";
                }
                emit(os.str(), out_file);
            }
        } else if (*cmd_kron) {
            SymRing ring(kron_n);
            Partition lambda = parse_partition(kron_lambda);
            Partition mu = parse_partition(kron_mu);
            const auto& prod = ring.kronecker_basis(lambda, mu);
            if (format == "json") {
                json out;
                out["n"] = kron_n;
                out["lambda"] = partition_json(lambda);
                out["mu"] = partition_json(mu);
                out["product"] = vc_json(prod);
                emit(out.dump(2), out_file);
            } else {
                emit(prod.to_string(), out_file);
            }
        } else if (*cmd_lr) {
            Partition lambda = parse_partition(lr_lambda);
            Partition mu = parse_partition(lr_mu);
            Partition nu = parse_partition(lr_nu);
            Int c = lr_coefficient(lambda, mu, nu);
            if (format == "json" || lr_list) {
                json out;
                out["lambda"] = partition_json(lambda);
                out["mu"] = partition_json(mu);
                out["nu"] = partition_json(nu);
                out["coefficient"] = c;
                if (lr_list && c > 0) {
                    json exps = json::array();
                    for (const auto& e : enumerate_expansions(lambda, mu, nu)) {
                        json boxes = json::array();
                        for (const auto& b : e.boxes)
                            boxes.push_back({{"row", b.row}, {"col", b.col}, {"label", b.label}});
                        exps.push_back({{"shape", partition_json(e.shape)}, {"boxes", boxes}});
                    }
                    out["expansions"] = exps;
                }
                emit(out.dump(2), out_file);
            } else {
                emit(std::to_string(c), out_file);
            }
        } else if (*cmd_dvir) {
            SymRing ring(dvir_n);
            DvirReport report = ring.dvir_check();
            if (format == "json") {
                json out;
                out["n"] = report.n;
                out["triples_checked"] = report.graded_triples_checked;
                out["vanishing_triples_checked"] = report.vanishing_triples_checked;
                out["mismatches"] = report.mismatches.size();
                emit(out.dump(2), out_file);
            } else {
                std::ostringstream os;
                os << "n=" << report.n << " graded triples=" << report.graded_triples_checked
                   << " vanishing triples=" << report.vanishing_triples_checked
                   << " mismatches=" << report.mismatches.size();
                emit(os.str(), out_file);
            }
            if (!report.mismatches.empty()) return 1;
        } else if (*cmd_dec) {
            SymRing ring(dec_n);
            Partition lambda = parse_partition(dec_lambda);
            HookExpression e = hook_decompose(ring, lambda);
            bool ok = true;
            if (dec_verify) ok = verify_decomposition(ring, lambda, e);
            if (format == "json") {
                json out;
                out["n"] = dec_n;
                out["lambda"] = partition_json(lambda);
                out["terms"] = expression_json(e);
                if (dec_verify) out["verified"] = ok;
                emit(out.dump(2), out_file);
            } else {
                std::string text = e.to_string();
                if (dec_verify) text += ok ? "  (verified)" : "  (VERIFICATION FAILED)";
                emit(text, out_file);
            }
            if (!ok) return 1;
        } else if (*cmd_gen) {
            GroupSpec g = parse_group(gen_group);
            GenerationReport report;
            if (g.kind == "sym") {
                if (gen_set != "hooks") throw CLI::ValidationError("--set", "sym supports set=hooks");
                SymRing ring(g.param);
                RingData data = sym_ring_data(ring);
                std::vector<int> gens;
                for (int k = 0; k < g.param; ++k)
                    gens.push_back(ring.table().index_of(hook_partition(g.param, k)));
                report = to_report(saturate(data, gens));
            } else if (g.kind == "b") {
                if (gen_set != "hooks" && gen_set != "hooks+u")
                    throw CLI::ValidationError("--set", "b supports set=hooks or hooks+u");
                BnExperimentReport exp = bn_experiments(g.param);
                report = gen_set == "hooks" ? exp.hooks_only : exp.hooks_and_u;
            } else {
                if (gen_set == "v+linear") report = g12_generation_check(g.param);
                else if (gen_set == "linear") report = g12_generation_check_linear_only(g.param);
                else throw CLI::ValidationError("--set", "g12 supports set=v+linear or linear");
            }
            if (format == "json") emit(generation_json(report).dump(2), out_file);
            else {
                std::ostringstream os;
                os << (report.full ? "full" : "not full") << " rank=" << report.rank;
                if (report.index >= 0) os << " index=" << report.index;
                os << " iterations=" << report.iterations;
                emit(os.str(), out_file);
            }
        } else if (*cmd_bn) {
            if (!bn_exp) throw CLI::ValidationError("bn", "pass --experiments");
            BnExperimentReport exp = bn_experiments(bn_n);
            json out;
            out["n"] = exp.n;
            out["hooks_only"] = generation_json(exp.hooks_only);
            out["hooks_and_u"] = generation_json(exp.hooks_and_u);
            if (format == "json") emit(out.dump(2), out_file);
            else {
                std::ostringstream os;
                os << "B_" << exp.n << " hooks only: " << (exp.hooks_only.full ? "full" : "not full")
                   << " (rank " << exp.hooks_only.rank << ")\n"
                   << "B_" << exp.n << " hooks + U: " << (exp.hooks_and_u.full ? "full" : "not full")
                   << " (rank " << exp.hooks_and_u.rank << ")";
                emit(os.str(), out_file);
            }
        } else if (*cmd_g12) {
            if (!g12_check) throw CLI::ValidationError("g12", "pass --check");
            GenerationReport report = g12_generation_check(g12_d);
            if (format == "json") emit(generation_json(report).dump(2), out_file);
            else {
                std::ostringstream os;
                os << "G(" << g12_d << ",1,2) V + linear: " << (report.full ? "full" : "not full")
                   << " rank=" << report.rank << " iterations=" << report.iterations;
                emit(os.str(), out_file);
            }
        } else if (*cmd_all) {
            return run_verify_all(sym_max, b_max, g12_max, format, out_file);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

namespace {

int run_verify_all(int sym_max, int b_max, int g12_max, const std::string& format,
                   const std::string& out_file) {
    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;
    auto record = [&](const std::string& name, bool pass) { checks.push_back({name, pass}); };

    // Level formula, both directions.
    {
        bool ok = true;
        for (int n = 1; n <= std::min(sym_max, 6); ++n) {
            SymRing ring(n);
            for (const auto& lambda : ring.table().labels())
                if (ring.level_bruteforce(lambda) != level(lambda)) ok = false;
        }
        record("level formula N(lambda) = n - lambda_1", ok);
    }
    // Dvir sweep.
    {
        bool ok = true;
        for (int n = 1; n <= std::min(sym_max, 7); ++n)
            if (!SymRing(n).dvir_check().mismatches.empty()) ok = false;
        record("Kronecker/LR graded agreement", ok);
    }
    // Hook round trip.
    {
        bool ok = true;
        for (int n = 1; n <= sym_max; ++n) {
            SymRing ring(n);
            HookDecomposer dec(ring);
            for (const auto& lambda : ring.table().labels())
                if (!verify_decomposition(ring, lambda, dec.decompose(lambda))) ok = false;
        }
        record("hook decomposition round trip", ok);
    }
    // S_n generation by hooks.
    {
        bool ok = true;
        for (int n = 1; n <= sym_max; ++n) {
            SymRing ring(n);
            RingData data = sym_ring_data(ring);
            std::vector<int> gens;
            for (int k = 0; k < n; ++k) gens.push_back(ring.table().index_of(hook_partition(n, k)));
            if (!is_full(saturate(data, gens).lattice)) ok = false;
        }
        record("S_n generated by hooks", ok);
    }
    // Rank-2 groups.
    {
        bool ok = true;
        for (int d = 2; d <= g12_max; ++d)
            if (!g12_generation_check(d).full) ok = false;
        record("G(d,1,2) generated by V + linear characters", ok);
    }
    // B_n deficiency and conjecture.
    {
        bool deficient = true, conjecture = true;
        for (int n = 1; n <= b_max; ++n) {
            BnExperimentReport exp = bn_experiments(n);
            if (n >= 4 && exp.hooks_only.full) deficient = false;
            if (!exp.hooks_and_u.full) conjecture = false;
        }
        record("B_n hooks-only deficiency (n >= 4)", deficient);
        record("B_n generated by hooks + U", conjecture);
    }

    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;
    if (format == "json") {
        json out;
        out["checks"] = json::array();
        for (const auto& c : checks) out["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
        out["all_pass"] = all_pass;
        emit(out.dump(2), out_file);
    } else {
        std::ostringstream os;
        for (const auto& c : checks) os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        os << (all_pass ? "all checks passed" : "SOME CHECKS FAILED");
        emit(os.str(), out_file);
    }
    return all_pass ? 0 : 1;
}

} // namespace
