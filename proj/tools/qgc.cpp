// Command-line front end for the quasi-group-code toolkit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgc/qgc.hpp"

namespace {

using namespace qgc;

std::vector<std::uint32_t> parse_grid(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    return out;
}

void write_output(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << bytes;
}

std::string json_str(const std::string& s) {
    std::string out;
    detail::json_escape_into(out, s);
    return out;
}

std::vector<Word> read_generator_rows(const Fq& F, std::istream& in) {
    std::vector<Word> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ls(line);
        Word row;
        std::string tok;
        while (ls >> tok) row.push_back(F.parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("no generator rows supplied");
    return rows;
}

void write_matrix_rows(const Fq& F, const std::vector<Word>& rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open matrix output file: " + path);
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) f << ' ';
            f << F.to_string(row[j]);
        }
        f << '\n';
    }
}

std::string matrix_json(const Fq& F, const std::vector<Word>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ", ";
        std::string line;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) line += ' ';
            line += F.to_string(rows[i][j]);
        }
        out += json_str(line);
    }
    return out + "]";
}

int cmd_decompose(const std::string& field, const std::string& group) {
    Fq F = parse_field(field);
    Group G = parse_group(group);
    Decomposition dec = primitive_idempotents(F, G);
    std::ostringstream os;
    os << "{\n  \"field\": " << json_str(field_literal(F)) << ",\n  \"group\": " << json_str(group_literal(G))
       << ",\n  \"dims\": [";
    for (std::size_t i = 0; i < dec.dims.size(); ++i) os << (i ? ", " : "") << dec.dims[i];
    os << "],\n  \"mu\": " << dec.mu_value;
    if (G.order % 2 == 1) {
        bar_pairing(dec);
        os << ",\n  \"r\": " << dec.bar_fixed.size() << ",\n  \"s\": " << dec.bar_pairs.size() << ",\n  \"k\": [";
        for (std::size_t i = 0; i < dec.hat_k.size(); ++i) os << (i ? ", " : "") << dec.hat_k[i];
        os << "]";
    }
    os << "\n}\n";
    std::cout << os.str();
    return 0;
}

int cmd_mindist(const std::string& field, const std::string& in_path, std::uint64_t budget) {
    Fq F = parse_field(field);
    std::vector<Word> rows;
    if (in_path.empty()) {
        rows = read_generator_rows(F, std::cin);
    } else {
        std::ifstream f(in_path);
        if (!f) throw std::runtime_error("cannot open input file: " + in_path);
        rows = read_generator_rows(F, f);
    }
    LinearCode C = code_from_generators(F, std::move(rows));
    int d = C.min_weight(budget);
    auto [rn, rd] = C.rate();
    std::ostringstream os;
    os << "{\"n\": " << C.length() << ", \"k\": " << C.dim() << ", \"d\": " << d << ", \"Delta\": "
       << static_cast<double>(d) / static_cast<double>(C.length()) << ", \"R\": \"" << rn << "/" << rd << "\"}\n";
    std::cout << os.str();
    return 0;
}

void print_code_summary(const Fq& F, const LinearCode& C, std::uint64_t budget, std::ostringstream& os) {
    os << "\"n\": " << C.length() << ", \"k\": " << C.dim();
    try {
        if (C.dim() > 0) os << ", \"d\": " << C.min_weight(budget);
    } catch (const BudgetExceeded&) {
        os << ", \"d\": \"skipped: budget\"";
    }
    os << ", \"generators\": " << matrix_json(F, C.basis().rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-group code toolkit"};
    app.require_subcommand(1);

    std::string field = "2^1", group = "c:1", out_path, format = "json", in_path;
    std::uint64_t seed = 0, trials = 100;
    std::uint32_t n_arg = 3;
    unsigned workers = 1;
    std::uint64_t budget = qgc::default_enumeration_budget();
    double delta = 0.1, rate = 0.5;

    auto* dec_cmd = app.add_subcommand("decompose", "semisimple decomposition of an abelian group algebra");
    dec_cmd->add_option("--field", field);
    dec_cmd->add_option("--group", group)->required();

    double q_delta = 0.11;
    std::uint64_t q_arg = 2;
    std::uint32_t ball_n = 10;
    auto* gv_cmd = app.add_subcommand("gv", "q-entropy and GV bound at a point");
    gv_cmd->add_option("--q", q_arg);
    gv_cmd->add_option("--delta", q_delta);

    auto* ball_cmd = app.add_subcommand("ball", "exact Hamming ball size");
    ball_cmd->add_option("--q", q_arg);
    ball_cmd->add_option("--n", ball_n);
    ball_cmd->add_option("--delta", q_delta);

    auto* mind_cmd = app.add_subcommand("mindist", "exact minimum distance of a generator matrix");
    mind_cmd->add_option("--field", field);
    mind_cmd->add_option("--in", in_path);
    mind_cmd->add_option("--budget", budget);

    auto* con_cmd = app.add_subcommand("construct", "build a code from a seeded draw");
    con_cmd->require_subcommand(1);
    std::size_t kk = 1, tt = 2;
    unsigned alpha = 1;
    std::string matrix_out;
    auto* con_lin = con_cmd->add_subcommand("linear", "random linear code");
    con_lin->add_option("--field", field);
    con_lin->add_option("--n", n_arg);
    con_lin->add_option("--k", kk);
    con_lin->add_option("--seed", seed);
    con_lin->add_option("--matrix-out", matrix_out);
    auto* con_quasi = con_cmd->add_subcommand("quasi", "random quasi-abelian code");
    con_quasi->add_option("--field", field);
    con_quasi->add_option("--group", group);
    con_quasi->add_option("--k", kk);
    con_quasi->add_option("--t", tt);
    con_quasi->add_option("--seed", seed);
    con_quasi->add_option("--matrix-out", matrix_out);
    auto* con_idx2 = con_cmd->add_subcommand("index2", "random index-2 code C_{a,a'}");
    con_idx2->add_option("--field", field);
    con_idx2->add_option("--group", group);
    con_idx2->add_option("--seed", seed);
    con_idx2->add_option("--matrix-out", matrix_out);
    auto* con_frac = con_cmd->add_subcommand("fractional", "random fractional-index code");
    con_frac->add_option("--field", field);
    con_frac->add_option("--n", n_arg);
    con_frac->add_option("--alpha", alpha);
    con_frac->add_option("--seed", seed);
    con_frac->add_option("--matrix-out", matrix_out);

    bool dagger = false;
    auto* sd_cmd = app.add_subcommand("selfdual", "sample a self-dual (or self-orthogonal) index-2 code");
    sd_cmd->add_option("--field", field);
    sd_cmd->add_option("--group", group);
    sd_cmd->add_flag("--dagger", dagger);
    sd_cmd->add_option("--seed", seed);
    sd_cmd->add_option("--budget", budget);

    std::uint32_t max_n = 50;
    auto* dih_cmd = app.add_subcommand("dihedral", "random dihedral code over D_n");
    dih_cmd->add_option("--field", field);
    dih_cmd->add_option("--n", n_arg);
    dih_cmd->add_option("--seed", seed);
    dih_cmd->add_option("--budget", budget);
    auto* dih_check = dih_cmd->add_subcommand("check-n", "list admissible n");
    dih_check->add_option("--field", field);
    dih_check->add_option("--max", max_n);

    std::string n_grid_s, t_grid_s;
    auto* exp_cmd = app.add_subcommand("experiment", "seeded Monte Carlo ensemble runs");
    exp_cmd->require_subcommand(1);
    std::vector<CLI::App*> exp_subs;
    for (const char* name : {"linear", "quasi", "index2", "selfdual", "selforth", "dihedral"}) {
        auto* sc = exp_cmd->add_subcommand(name, name);
        sc->add_option("--field", field);
        sc->add_option("--group", group);
        sc->add_option("--n-grid", n_grid_s);
        sc->add_option("--t-grid", t_grid_s);
        sc->add_option("--r", rate);
        sc->add_option("--delta", delta);
        sc->add_option("--trials", trials);
        sc->add_option("--seed", seed);
        sc->add_option("--workers", workers);
        sc->add_option("--budget", budget);
        sc->add_option("--out", out_path);
        sc->add_option("--format", format);
        exp_subs.push_back(sc);
    }

    std::uint32_t limit = 100;
    qgc::SearchOpts sopts;
    auto* search_cmd = app.add_subcommand("search-n", "scan for good coindexes n");
    search_cmd->add_option("--q", q_arg);
    search_cmd->add_option("--limit", limit);
    search_cmd->add_flag("--require-minus-one", sopts.require_minus_one);
    search_cmd->add_flag("--prime-only", sopts.prime_only);
    search_cmd->add_flag("--odd", sopts.odd_only);
    search_cmd->add_flag("--gv", sopts.gv_filter);
    search_cmd->add_option("--threshold", sopts.min_mu);
    search_cmd->add_option("--out", out_path);
    search_cmd->add_option("--format", format);

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace qgc;
        if (*dec_cmd) return cmd_decompose(field, group);
        if (*gv_cmd) {
            std::cout << "{\"q\": " << q_arg << ", \"delta\": " << q_delta << ", \"h\": " << h_q(q_arg, q_delta)
                      << ", \"g\": " << g_q(q_arg, q_delta) << "}\n";
            return 0;
        }
        if (*ball_cmd) {
            std::cout << "{\"q\": " << q_arg << ", \"n\": " << ball_n << ", \"delta\": " << q_delta
                      << ", \"radius\": " << ball_radius(ball_n, q_delta) << ", \"count\": \""
                      << ball_size(q_arg, ball_n, q_delta).to_string() << "\"}\n";
            return 0;
        }
        if (*mind_cmd) return cmd_mindist(field, in_path, budget);

        if (*con_cmd) {
            Fq F = parse_field(field);
            RngStream rng = RngStream::substream(seed, 0);
            std::ostringstream os;
            if (*con_lin) {
                LinearCode C = random_linear_code(F, n_arg, kk, rng);
                if (!matrix_out.empty()) write_matrix_rows(F, C.basis().rows, matrix_out);
                os << "{\"construct\": \"linear\", \"seed\": " << seed << ", ";
                print_code_summary(F, C, budget, os);
                os << "}\n";
            } else if (*con_quasi) {
                Group G = parse_group(group);
                QuasiMatrix A = sample_quasi_matrix(F, G, kk, tt, rng);
                LinearCode C = quasi_code(A);
                if (!matrix_out.empty()) write_matrix_rows(F, C.basis().rows, matrix_out);
                os << "{\"construct\": \"quasi\", \"group\": " << json_str(group_literal(G))
                   << ", \"seed\": " << seed << ", ";
                print_code_summary(F, C, budget, os);
                os << "}\n";
            } else if (*con_idx2) {
                Group G = parse_group(group);
                GaElem a = sample_ga(F, G, rng), a2 = sample_ga(F, G, rng);
                LinearCode C = index2_code(a, a2);
                auto [ann, adim] = annihilator(a, a2);
                if (!matrix_out.empty()) write_matrix_rows(F, C.basis().rows, matrix_out);
                os << "{\"construct\": \"index2\", \"group\": " << json_str(group_literal(G))
                   << ", \"seed\": " << seed << ", \"a\": " << json_str(ga_to_string(a))
                   << ", \"a2\": " << json_str(ga_to_string(a2)) << ", \"ann_dim\": " << adim << ", ";
                print_code_summary(F, C, budget, os);
                os << "}\n";
            } else if (*con_frac) {
                Group G = Group::cyclic(n_arg);
                Group Gbig = Group::cyclic(alpha * n_arg);
                GaElem a = sample_ga(F, G, rng), a2 = sample_ga(F, G, rng);
                LinearCode C = fractional_code(a, a2, alpha, Gbig);
                if (!matrix_out.empty()) write_matrix_rows(F, C.basis().rows, matrix_out);
                os << "{\"construct\": \"fractional\", \"coindex\": " << n_arg << ", \"alpha\": " << alpha
                   << ", \"seed\": " << seed << ", ";
                print_code_summary(F, C, budget, os);
                os << "}\n";
            }
            write_output(os.str(), out_path);
            return 0;
        }

        if (*dih_check) {
            Fq F = parse_field(field);
            std::ostringstream os;
            os << "{\"field\": " << json_str(field_literal(F)) << ", \"admissible_n\": [";
            bool first = true;
            for (std::uint32_t n = 3; n <= max_n; n += 2) {
                if (std::gcd<std::uint64_t>(n, F.q) != 1) continue;
                if (!minus_one_in_qgroup(n, F.q)) continue;
                os << (first ? "" : ", ") << n;
                first = false;
            }
            os << "]}\n";
            std::cout << os.str();
            return 0;
        }
        if (*dih_cmd) {
            Fq F = parse_field(field);
            DihedralDecomposition dd = dihedral_decompose(F, n_arg);
            std::ostringstream os;
            os << "{\"field\": " << json_str(field_literal(F)) << ", \"n\": " << n_arg << ", \"r\": " << dd.r()
               << ", \"k\": [";
            for (std::size_t i = 0; i < dd.k.size(); ++i) os << (i ? ", " : "") << dd.k[i];
            os << "], \"g\": [";
            for (std::size_t i = 1; i <= dd.r(); ++i) {
                M2Iso iso = m2_iso(dd, i);
                os << (i > 1 ? ", " : "") << json_str(ga_to_string(iso.g));
            }
            DihedralCodeFamily fam = build_C(dd);
            RngStream rng = RngStream::substream(seed, 0);
            GaElem al = sample_Kstar(dd, rng), be = sample_Kstar(dd, rng);
            LinearCode C = code_alpha_beta(dd, fam, al, be);
            os << "], \"dim_C\": " << fam.C.rank() << ", \"seed\": " << seed;
            try {
                os << ", \"d\": " << C.min_weight(budget);
            } catch (const BudgetExceeded&) {
                os << ", \"d\": \"skipped: budget\"";
            }
            bool even_q = F.q % 2 == 0;
            os << ", \"property\": \"" << (even_q ? "self_dual" : "lcd") << "\", \"property_holds\": "
               << ((even_q ? is_self_dual(C) : is_lcd(C)) ? "true" : "false") << "}\n";
            std::cout << os.str();
            return 0;
        }

        if (*sd_cmd) {
            Fq F = parse_field(field);
            Group G = parse_group(group);
            Decomposition dc = primitive_idempotents(F, G);
            bar_pairing(dc);
            UnitarySolutionSet sols = solve_unitary(dc);
            RngStream rng = RngStream::substream(seed, 0);
            std::ostringstream os;
            if (dagger) {
                GaElem b = sample_D_dagger(sols, rng);
                LinearCode C = code_C1dag(b, dc);
                os << "{\"D_dagger_size\": \"" << count_D_dagger(dc).to_string() << "\", \"b\": "
                   << json_str(ga_to_string(b)) << ", \"self_orthogonal\": "
                   << (is_self_orthogonal(C) ? "true" : "false") << ", \"seed\": " << seed << ", ";
                print_code_summary(F, C, budget, os);
            } else {
                BigUint dsz = count_D(dc);
                os << "{\"D_size\": \"" << dsz.to_string() << "\", ";
                GaElem b = sample_D(sols, rng);
                LinearCode C = code_C1b(b);
                os << "\"b\": " << json_str(ga_to_string(b)) << ", \"self_dual\": "
                   << (is_self_dual(C) ? "true" : "false") << ", \"seed\": " << seed << ", ";
                print_code_summary(F, C, budget, os);
            }
            os << "}\n";
            write_output(os.str(), out_path);
            return 0;
        }

        if (*search_cmd) {
            ExperimentReport rep = search_report(q_arg, limit, sopts);
            write_output(emit_report(rep, format), out_path);
            return 0;
        }

        if (*exp_cmd) {
            ExperimentConfig cfg;
            cfg.field = field;
            cfg.group = *exp_subs[1] ? group : "";  // coindex group is a quasi-run knob
            cfg.n_grid = parse_grid(n_grid_s);
            cfg.t_grid = parse_grid(t_grid_s);
            cfg.r = rate;
            cfg.delta = delta;
            // default delta keeps g_q(delta) above the standing hypotheses:
            // > 1/2 for index-2 trends, > 3/4 for self-dual and dihedral runs
            for (std::size_t i = 0; i < exp_subs.size(); ++i)
                if (*exp_subs[i] && exp_subs[i]->count("--delta") == 0) {
                    Fq Ftmp = parse_field(field);
                    if (i >= 3) cfg.delta = 0.9 * g_q_inverse(Ftmp.q, 0.75);
                    else if (i == 2) cfg.delta = 0.9 * g_q_inverse(Ftmp.q, 0.5);
                }
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.budget = budget;
            auto t0 = std::chrono::steady_clock::now();
            ExperimentReport rep;
            if (*exp_subs[0]) rep = exp_random_linear(cfg);
            else if (*exp_subs[1]) rep = exp_quasi_abelian(cfg);
            else if (*exp_subs[2]) rep = exp_index2(cfg);
            else if (*exp_subs[3]) rep = exp_selfdual(cfg);
            else if (*exp_subs[4]) rep = exp_selforth(cfg);
            else if (*exp_subs[5]) rep = exp_dihedral(cfg);
            auto t1 = std::chrono::steady_clock::now();
            // wall clock and worker count stay out of the report bytes so a
            // rerun (with any worker count) is byte-identical
            std::cerr << "wall_clock_s="
                      << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() / 1000.0
                      << " workers=" << workers << "\n";
            write_output(emit_report(rep, format), out_path);
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
