// Command-line front end: every library computation behind one binary with
// deterministic text and JSON output.
//
// Exit codes: 0 success, 1 domain error, 2 usage error (including inputs
// refused by the SCHUBERT_MAX_N cap, default 7).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schub/flag.hpp"
#include "schub/grassmannian.hpp"
#include "schub/gz.hpp"
#include "schub/pipedream.hpp"
#include "schub/qbinom.hpp"
#include "schub/schur.hpp"

using json = nlohmann::json;
using namespace schub;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_rank() {
    const char* env = std::getenv("SCHUBERT_MAX_N");
    if (!env || !*env) return 7;
    try {
        int v = std::stoi(env);
        if (v < 1) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw UsageError("SCHUBERT_MAX_N must be a positive integer");
    }
}

void check_rank(int n, const std::string& what) {
    int cap = max_rank();
    if (n > cap)
        throw UsageError(what + " = " + std::to_string(n) + " exceeds SCHUBERT_MAX_N = " +
                         std::to_string(cap));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_int(const std::string& s) {
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        throw UsageError("malformed integer literal: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("malformed integer literal: '" + s + "'");
    return v;
}

// Partition literal: digit string ("21", "0" = empty) or comma list ("2,1").
Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    try {
        if (s.empty() || s == "0") return Partition();
        if (s.find(',') != std::string::npos) {
            for (const std::string& tok : split(s, ','))
                if (int v = static_cast<int>(parse_int(tok)); v != 0) parts.push_back(v);
        } else {
            for (char c : s) {
                if (c < '0' || c > '9') throw UsageError("");
                if (c != '0') parts.push_back(c - '0');
            }
        }
        return Partition(parts);
    } catch (const std::exception&) {
        throw UsageError("malformed partition literal: '" + s + "'");
    }
}

// Permutation literal: digit string for n <= 9 or comma list.
Permutation parse_permutation(const std::string& s) {
    std::vector<int> images;
    try {
        if (s.find(',') != std::string::npos) {
            for (const std::string& tok : split(s, ',')) images.push_back(static_cast<int>(parse_int(tok)));
        } else {
            for (char c : s) {
                if (c < '1' || c > '9') throw UsageError("");
                images.push_back(c - '0');
            }
        }
        return Permutation(images);
    } catch (const std::exception&) {
        throw UsageError("malformed permutation literal: '" + s + "'");
    }
}

Weight parse_weight(const std::string& s) {
    Weight w;
    for (const std::string& tok : split(s, ',')) w.push_back(parse_int(tok));
    return w;
}

std::string weight_key(const Weight& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out + "]";
}

// ---- payload builders -------------------------------------------------

json poly_json(const MultiPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json term;
        term["exp"] = it->first;
        term["coeff"] = it->second.to_string();
        terms.push_back(term);
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

json expansion_json(const std::map<std::string, std::string>& terms) {
    json obj = json::object();
    for (const auto& [key, value] : terms) obj[key] = value;
    return json{{"terms", obj}};
}

std::string expansion_text(const std::map<std::string, std::string>& terms, const std::string& symbol) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [key, value] : terms) {
        if (!out.empty()) out += " + ";
        if (value != "1") out += value + "*";
        out += symbol + key;
    }
    return out;
}

std::map<std::string, std::string> gr_terms(const GrClassSum& x) {
    std::map<std::string, std::string> out;
    for (const auto& [p, c] : x.terms()) out[p.to_string()] = c.to_string();
    return out;
}

std::map<std::string, std::string> fl_terms(const FlClassSum& x) {
    std::map<std::string, std::string> out;
    for (const auto& [w, c] : x.terms()) out["[" + w.to_string() + "]"] = c.to_string();
    return out;
}

struct Output {
    bool as_json;
    void emit(const json& payload, const std::string& text) const {
        if (as_json)
            std::cout << payload.dump() << "\n";
        else
            std::cout << text << "\n";
    }
    void value(const std::string& v) const { emit(json{{"value", v}}, v); }
    void boolean(bool b) const { emit(json{{"value", b}}, b ? "true" : "false"); }
    void polynomial(const MultiPoly& p, const std::string& var) const {
        emit(poly_json(p), p.to_string(var));
    }
    void expansion(const std::map<std::string, std::string>& terms, const std::string& symbol) const {
        emit(expansion_json(terms), expansion_text(terms, symbol));
    }
};

json pattern_json(const GZPattern& p) {
    json rows = json::array();
    for (const auto& row : p.rows) rows.push_back(row);
    return rows;
}

std::string pattern_text(const GZPattern& p) {
    std::string out;
    for (size_t i = 0; i < p.rows.size(); ++i) {
        if (i) out += " / ";
        for (size_t j = 0; j < p.rows[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(p.rows[i][j]);
        }
    }
    return out;
}

json face_json(const KoganFace& f) {
    json eqs = json::array();
    for (const auto& [i, j] : f.equalities) eqs.push_back(json::array({i, j}));
    return eqs;
}

std::string face_text(const KoganFace& f) {
    if (f.equalities.empty()) return "{}";
    std::string out = "{";
    for (size_t t = 0; t < f.equalities.size(); ++t) {
        if (t) out += " ";
        out += "(" + std::to_string(f.equalities[t].first) + "," +
               std::to_string(f.equalities[t].second) + ")";
    }
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert calculus on Grassmannians, flag varieties and Gelfand-Zetlin polytopes"};
    app.require_subcommand(1);
    std::string output_mode = "text";
    app.add_option("--output", output_mode, "Output mode: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // Option storage shared across subcommands.
    std::string lambda_s, mu_s, nu_s, perm_s, v_s, w_s, classes_s, omega_s, schurs_s, method_s = "both";
    int k = 0, n = 0, m = 0, c = 0, i = 0;
    bool dim_only = false;

    CLI::App* gr = app.add_subcommand("gr", "Grassmannian cohomology");
    CLI::App* gr_pieri = gr->add_subcommand("pieri", "Multiply a class by sigma_m (Pieri rule)");
    gr_pieri->add_option("--k", k)->required();
    gr_pieri->add_option("--n", n)->required();
    gr_pieri->add_option("--lambda", lambda_s)->required();
    gr_pieri->add_option("--m", m)->required();
    CLI::App* gr_prod_cmd = gr->add_subcommand("product", "Product of listed Schubert classes");
    gr_prod_cmd->add_option("--k", k)->required();
    gr_prod_cmd->add_option("--n", n)->required();
    gr_prod_cmd->add_option("--classes", classes_s, "Comma-separated digit-string partitions")->required();
    CLI::App* gr_degree = gr->add_subcommand("degree", "Degree of a Schubert variety");
    gr_degree->add_option("--k", k)->required();
    gr_degree->add_option("--n", n)->required();
    gr_degree->add_option("--lambda", lambda_s, "Defaults to the empty partition");
    CLI::App* gr_poinc_cmd = gr->add_subcommand("poincare", "Poincare polynomial of Gr(k,n)");
    gr_poinc_cmd->add_option("--k", k)->required();
    gr_poinc_cmd->add_option("--n", n)->required();
    CLI::App* gr_plucker = gr->add_subcommand("plucker", "Pluecker quadrics of Gr(2,n); with --omega, decomposability");
    gr_plucker->add_option("--n", n)->required();
    gr_plucker->add_option("--omega", omega_s, "Comma-separated rational Pluecker coordinates");

    CLI::App* flag = app.add_subcommand("flag", "Full flag variety cohomology");
    CLI::App* flag_schubpoly = flag->add_subcommand("schubpoly", "Schubert polynomial");
    flag_schubpoly->add_option("--perm", perm_s)->required();
    CLI::App* flag_monk = flag->add_subcommand("monk", "Multiply by sigma_{s_i} (Chevalley-Monk rule)");
    flag_monk->add_option("--perm", perm_s)->required();
    flag_monk->add_option("--i", i)->required();
    CLI::App* flag_prod = flag->add_subcommand("product", "Product of two flag Schubert classes");
    flag_prod->add_option("--v", v_s)->required();
    flag_prod->add_option("--w", w_s)->required();
    CLI::App* flag_poinc = flag->add_subcommand("poincare", "Poincare polynomial of Fl(n)");
    flag_poinc->add_option("--n", n)->required();
    CLI::App* flag_stab = flag->add_subcommand("stability", "Stability of the Schubert polynomial under S_n -> S_{n+1}");
    flag_stab->add_option("--perm", perm_s)->required();

    CLI::App* sym = app.add_subcommand("sym", "Symmetric functions");
    CLI::App* sym_schur = sym->add_subcommand("schur", "Schur polynomial");
    sym_schur->add_option("--lambda", lambda_s)->required();
    sym_schur->add_option("--k", k)->required();
    sym_schur->add_option("--method", method_s)->check(CLI::IsMember({"both", "bialternant", "ssyt"}));
    CLI::App* sym_expand = sym->add_subcommand("expand", "Schur expansion of a product of Schur polynomials");
    sym_expand->add_option("--schurs", schurs_s, "Comma-separated digit-string partitions")->required();
    sym_expand->add_option("--k", k, "Variable count (defaults to total box count)");
    CLI::App* sym_lr = sym->add_subcommand("lr", "Littlewood-Richardson coefficient");
    sym_lr->add_option("--lambda", lambda_s)->required();
    sym_lr->add_option("--mu", mu_s)->required();
    sym_lr->add_option("--nu", nu_s)->required();

    CLI::App* comb = app.add_subcommand("comb", "Partitions, tableaux, permutations");
    CLI::App* comb_partitions = comb->add_subcommand("partitions", "Partitions inside a k x c box");
    comb_partitions->add_option("--k", k)->required();
    comb_partitions->add_option("--c", c)->required();
    CLI::App* comb_syt = comb->add_subcommand("syt", "Hook lengths and standard tableau count");
    comb_syt->add_option("--lambda", lambda_s)->required();
    CLI::App* comb_qbinom = comb->add_subcommand("qbinom", "Gaussian binomial coefficient");
    comb_qbinom->add_option("--n", n)->required();
    comb_qbinom->add_option("--k", k)->required();
    CLI::App* comb_bruhat = comb->add_subcommand("bruhat", "Bruhat order comparison v <= w");
    comb_bruhat->add_option("--v", v_s)->required();
    comb_bruhat->add_option("--w", w_s)->required();

    CLI::App* pd = app.add_subcommand("pipedreams", "Reduced pipe dreams");
    CLI::App* pd_list = pd->add_subcommand("list", "All reduced pipe dreams of a permutation");
    pd_list->add_option("--perm", perm_s)->required();
    CLI::App* pd_poly = pd->add_subcommand("poly", "Fomin-Kirillov monomial sum");
    pd_poly->add_option("--perm", perm_s)->required();

    CLI::App* gz = app.add_subcommand("gz", "Gelfand-Zetlin polytopes");
    CLI::App* gz_points = gz->add_subcommand("points", "Lattice points of GZ(lambda)");
    gz_points->add_option("--lambda", lambda_s)->required();
    CLI::App* gz_faces = gz->add_subcommand("faces", "Reduced Kogan faces of a permutation");
    gz_faces->add_option("--perm", perm_s)->required();
    CLI::App* gz_demazure = gz->add_subcommand("demazure", "Demazure character from the face union");
    gz_demazure->add_option("--perm", perm_s)->required();
    gz_demazure->add_option("--lambda", lambda_s)->required();
    gz_demazure->add_flag("--dim", dim_only, "Print the dimension only");
    CLI::App* gz_volume = gz->add_subcommand("volume", "Volume polynomial of GZ in lambda_1..lambda_n");
    gz_volume->add_option("--n", n)->required();
    CLI::App* gz_pairing = gz->add_subcommand("pairing", "Khovanskii-Pukhlikov pairing of two classes");
    gz_pairing->add_option("--v", v_s)->required();
    gz_pairing->add_option("--w", w_s)->required();
    CLI::App* gz_degree = gz->add_subcommand("degree", "Degree of a Schubert variety via face volumes");
    gz_degree->add_option("--perm", perm_s)->required();
    gz_degree->add_option("--lambda", lambda_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    Output out{output_mode == "json"};

    try {
        if (gr_pieri->parsed()) {
            check_rank(n, "n");
            GrClassSum x(Box(k, n - k), parse_partition(lambda_s));
            out.expansion(gr_terms(pieri_multiply(x, m)), "s");
        } else if (gr_prod_cmd->parsed()) {
            check_rank(n, "n");
            Box box(k, n - k);
            GrClassSum acc(box, Partition());
            for (const std::string& tok : split(classes_s, ','))
                acc = gr_product(acc, GrClassSum(box, parse_partition(tok)));
            out.expansion(gr_terms(acc), "s");
        } else if (gr_degree->parsed()) {
            check_rank(n, "n");
            out.value(schubert_degree_gr(parse_partition(lambda_s), k, n).to_string());
        } else if (gr_poinc_cmd->parsed()) {
            check_rank(n, "n");
            out.polynomial(gr_poincare(k, n), "q");
        } else if (gr_plucker->parsed()) {
            check_rank(n, "n");
            if (!omega_s.empty()) {
                std::vector<Rat> coords;
                for (const std::string& tok : split(omega_s, ',')) {
                    auto parts = split(tok, '/');
                    if (parts.size() == 1)
                        coords.push_back(Rat(BigInt(parts[0])));
                    else if (parts.size() == 2)
                        coords.push_back(Rat(BigInt(parts[0]), BigInt(parts[1])));
                    else
                        throw UsageError("malformed rational literal: '" + tok + "'");
                }
                out.boolean(is_decomposable(coords));
            } else {
                json quadrics = json::array();
                std::string text;
                for (const MultiPoly& q : plucker_quadrics_k2(n)) {
                    quadrics.push_back(poly_json(q));
                    if (!text.empty()) text += "\n";
                    text += q.to_string("p");
                }
                out.emit(json{{"quadrics", quadrics}}, text.empty() ? "(none)" : text);
            }
        } else if (flag_schubpoly->parsed()) {
            Permutation w = parse_permutation(perm_s);
            check_rank(w.degree(), "n");
            out.polynomial(schubert_polynomial(w).poly, "x");
        } else if (flag_monk->parsed()) {
            Permutation w = parse_permutation(perm_s);
            check_rank(w.degree(), "n");
            out.expansion(fl_terms(monk_multiply(FlClassSum(w.degree(), w), i)), "S");
        } else if (flag_prod->parsed()) {
            Permutation v = parse_permutation(v_s), w = parse_permutation(w_s);
            check_rank(v.degree(), "n");
            if (v.degree() != w.degree()) throw std::domain_error("flag product: degree mismatch");
            out.expansion(fl_terms(flag_product(FlClassSum(v.degree(), v), FlClassSum(w.degree(), w))), "S");
        } else if (flag_poinc->parsed()) {
            check_rank(n, "n");
            out.polynomial(flag_poincare(n), "q");
        } else if (flag_stab->parsed()) {
            Permutation w = parse_permutation(perm_s);
            check_rank(w.degree() + 1, "n");
            out.boolean(stability_check(w));
        } else if (sym_schur->parsed()) {
            check_rank(k, "k");
            Partition lam = parse_partition(lambda_s);
            MultiPoly poly(k);
            if (method_s == "bialternant") {
                poly = schur_bialternant(lam, k);
            } else if (method_s == "ssyt") {
                poly = schur_ssyt(lam, k);
            } else {
                poly = schur_bialternant(lam, k);
                if (poly != schur_ssyt(lam, k))
                    throw std::logic_error("sym schur: the two definitions disagree");
            }
            out.polynomial(poly, "x");
        } else if (sym_expand->parsed()) {
            std::vector<Partition> factors;
            int total = 0;
            for (const std::string& tok : split(schurs_s, ',')) {
                factors.push_back(parse_partition(tok));
                total += factors.back().size();
            }
            if (k == 0) k = std::max(total, 1);
            check_rank(k, "k");
            MultiPoly product = MultiPoly::constant(Rat(1), k);
            for (const Partition& p : factors) product *= schur_ssyt(p, k);
            std::map<std::string, std::string> terms;
            for (const auto& [p, coeff] : schur_expand(product)) terms[p.to_string()] = coeff.to_string();
            out.expansion(terms, "s");
        } else if (sym_lr->parsed()) {
            Partition lam = parse_partition(lambda_s), mu = parse_partition(mu_s), nu = parse_partition(nu_s);
            check_rank(lam.size() + mu.size(), "|lambda|+|mu|");
            out.value(lr_coefficient(lam, mu, nu).to_string());
        } else if (comb_partitions->parsed()) {
            check_rank(k, "k");
            check_rank(c, "c");
            json listing = json::array();
            std::string text;
            for (const Partition& p : partitions_in_box(Box(k, c))) {
                listing.push_back(p.to_string());
                if (!text.empty()) text += "\n";
                text += p.to_string();
            }
            out.emit(json{{"count", listing.size()}, {"partitions", listing}}, text);
        } else if (comb_syt->parsed()) {
            Partition lam = parse_partition(lambda_s);
            check_rank(lam.size(), "|lambda|");
            HookData data = hooks_and_syt_count(lam);
            json hooks = json::array();
            std::string text = "hooks:";
            for (int h : data.hooks) {
                hooks.push_back(h);
                text += " " + std::to_string(h);
            }
            text += "\ncount: " + data.syt_count.to_string();
            out.emit(json{{"hooks", hooks}, {"count", data.syt_count.to_string()}}, text);
        } else if (comb_qbinom->parsed()) {
            check_rank(n, "n");
            out.polynomial(q_binomial(n, k), "q");
        } else if (comb_bruhat->parsed()) {
            Permutation v = parse_permutation(v_s), w = parse_permutation(w_s);
            check_rank(v.degree(), "n");
            out.boolean(bruhat_leq(v, w));
        } else if (pd_list->parsed()) {
            Permutation w = parse_permutation(perm_s);
            check_rank(w.degree(), "n");
            json listing = json::array();
            std::string text;
            for (const PipeDream& p : enumerate_reduced(w)) {
                json crosses = json::array();
                std::string line;
                for (const auto& [r, cc] : p.crosses) {
                    crosses.push_back(json::array({r, cc}));
                    if (!line.empty()) line += " ";
                    line += "(" + std::to_string(r) + "," + std::to_string(cc) + ")";
                }
                listing.push_back(crosses);
                if (!text.empty()) text += "\n";
                text += "{" + line + "}";
            }
            out.emit(json{{"count", listing.size()}, {"pipedreams", listing}},
                     text.empty() ? "(none)" : text);
        } else if (pd_poly->parsed()) {
            Permutation w = parse_permutation(perm_s);
            check_rank(w.degree(), "n");
            out.polynomial(fk_polynomial(w), "x");
        } else if (gz_points->parsed()) {
            Weight lam = parse_weight(lambda_s);
            check_rank(static_cast<int>(lam.size()), "n");
            json listing = json::array();
            std::string text;
            for (const GZPattern& p : gz_lattice_points(lam)) {
                listing.push_back(pattern_json(p));
                if (!text.empty()) text += "\n";
                text += pattern_text(p);
            }
            out.emit(json{{"count", listing.size()}, {"patterns", listing}},
                     text.empty() ? "(none)" : text);
        } else if (gz_faces->parsed()) {
            Permutation w = parse_permutation(perm_s);
            check_rank(w.degree(), "n");
            json listing = json::array();
            std::string text;
            for (const KoganFace& f : enumerate_reduced_kogan_faces(w)) {
                listing.push_back(face_json(f));
                if (!text.empty()) text += "\n";
                text += face_text(f);
            }
            out.emit(json{{"count", listing.size()}, {"faces", listing}},
                     text.empty() ? "(none)" : text);
        } else if (gz_demazure->parsed()) {
            Permutation w = parse_permutation(perm_s);
            Weight lam = parse_weight(lambda_s);
            check_rank(w.degree(), "n");
            if (dim_only) {
                out.value(demazure_dimension(w, lam).to_string());
            } else {
                std::map<std::string, std::string> terms;
                for (const auto& [weight, mult] : demazure_character(w, lam))
                    terms[weight_key(weight)] = mult.to_string();
                out.expansion(terms, "e");
            }
        } else if (gz_volume->parsed()) {
            check_rank(n, "n");
            out.polynomial(gz_volume_polynomial(n), "L");
        } else if (gz_pairing->parsed()) {
            Permutation w = parse_permutation(w_s), v = parse_permutation(v_s);
            check_rank(w.degree(), "n");
            out.value(kp_pairing(w, v, w.degree()).to_string());
        } else if (gz_degree->parsed()) {
            Permutation w = parse_permutation(perm_s);
            check_rank(w.degree(), "n");
            out.value(flag_schubert_degree(w, parse_weight(lambda_s)).to_string());
        } else {
            std::cerr << "usage error: missing subcommand\n";
            return 2;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
