#include "wsteen/cli.hpp"

#include <cctype>

#include "CLI11.hpp"
#include "wsteen/cache.hpp"
#include "wsteen/eta_local.hpp"
#include "wsteen/expr.hpp"
#include "wsteen/homology.hpp"
#include "wsteen/suites.hpp"

namespace wsteen {

namespace {

nlohmann::ordered_json basis_json(const std::string& object, const std::string& field, int p,
                                  int q) {
    PresetPtr preset = FieldPreset::by_flag(field);
    Context ctx(preset);
    Bidegree b{p, q};
    std::vector<std::string> basis;
    if (object == "dual-steenrod") {
        for (const auto& m : ctx.abasis(b)) basis.push_back(ctx.alg().str(m));
    } else if (object == "h-hw") {
        for (const auto& it : ctx.hw_basis(b)) basis.push_back(ctx.str(it));
    } else if (object == "h-km") {
        for (const auto& m : ctx.hkm_transversal(b)) basis.push_back(ctx.alg().str(m));
    } else if (object == "km-hw") {
        for (const auto& it : ctx.kmhw_basis(b)) basis.push_back(ctx.str(it));
    } else if (object == "h-kw") {
        for (const auto& it : ctx.hkw_presentation_basis(b)) basis.push_back(ctx.str(it));
    } else {
        throw AlgebraError("unknown object '" + object +
                           "' (want dual-steenrod|h-hw|h-km|km-hw|h-kw)");
    }
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["object"] = object;
    j["field"] = preset->name();
    j["p"] = p;
    j["q"] = q;
    j["dim"] = basis.size();
    j["basis"] = basis;
    return j;
}

uint16_t parse_iset(const std::string& s) {
    uint16_t mask = 0;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        int v = std::stoi(cur);
        if (v < 2 || v >= kMaxGenStorage) throw AlgebraError("index set entries must be >= 2");
        mask |= static_cast<uint16_t>(1 << v);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',')
            flush();
        else if (std::isdigit(static_cast<unsigned char>(c)))
            cur += c;
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw AlgebraError("bad index set '" + s + "'");
    }
    flush();
    return mask;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dual motivic Witt Steenrod algebra engine"};
    app.require_subcommand(1);

    std::string field = "qcl";
    bool json_out = false;
    std::string cache_dir;
    app.add_option("--field", field, "field preset: qcl|fq1|fq3|custom:<file>")->capture_default_str();
    app.add_flag("--json", json_out, "emit JSON instead of tables");
    app.add_option("--cache", cache_dir, "result cache directory (default $WSTEEN_CACHE or .wsteen-cache)");

    auto* basis_cmd = app.add_subcommand("basis", "enumerate a basis in one bidegree");
    std::string object = "dual-steenrod";
    int p = 0, q = 0;
    bool no_cache = false;
    basis_cmd->add_option("--object", object, "dual-steenrod|h-hw|h-km|km-hw|h-kw")
        ->capture_default_str();
    basis_cmd->add_option("--p", p, "topological degree")->required();
    basis_cmd->add_option("--q", q, "weight")->required();
    basis_cmd->add_flag("--no-cache", no_cache, "bypass the result cache");

    auto* act_cmd = app.add_subcommand("act", "apply Sq^1 / Sq^2 to an expression");
    std::string op = "sq2", side = "right", expr;
    act_cmd->add_option("--op", op, "sq1|sq2")->capture_default_str();
    act_cmd->add_option("--side", side, "left|right")->capture_default_str();
    act_cmd->add_option("--expr", expr, "element expression")->required();

    auto* pair_cmd = app.add_subcommand("pair", "build a canonical pullback pair");
    std::string gen = "tau0";
    std::string iset_str_arg;
    int tj = 2;
    pair_cmd->add_option("--gen", gen, "tau0|s|t_j|c|c1|t|t1")->capture_default_str();
    pair_cmd->add_option("--set", iset_str_arg, "index set, e.g. 2,3");
    pair_cmd->add_option("--j", tj, "index for t_j")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    SuiteOptions opt;
    std::string suite;
    verify_cmd->add_option("--suite", suite, "one of: hopf action d-squared kernel-d freeness "
                                             "lemma-c lemma-t kw-presentation main-theorem "
                                             "eta-torsion eta-inverted all")
        ->required();
    verify_cmd->add_option("--max-p", opt.max_p)->capture_default_str();
    verify_cmd->add_option("--min-q", opt.min_q)->capture_default_str();
    verify_cmd->add_option("--max-q", opt.max_q)->capture_default_str();
    verify_cmd->add_option("--max-index", opt.max_index)->capture_default_str();
    verify_cmd->add_option("--jmax", opt.jmax)->capture_default_str();
    verify_cmd->add_option("--weight-cap", opt.weight_cap)->capture_default_str();
    verify_cmd->add_option("--random", opt.n_random)->capture_default_str();
    verify_cmd->add_option("--seed", opt.seed)->capture_default_str();

    auto* report_cmd = app.add_subcommand("report", "run every suite and emit one report");
    report_cmd->add_option("--max-p", opt.max_p)->capture_default_str();
    report_cmd->add_option("--min-q", opt.min_q)->capture_default_str();
    report_cmd->add_option("--weight-cap", opt.weight_cap)->capture_default_str();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        opt.field = field;
        if (basis_cmd->parsed()) {
            ResultCache cache(no_cache ? ""
                                       : (cache_dir.empty() ? ResultCache::default_dir() : cache_dir));
            std::string key = std::string(kArtifactVersion) + "|order" +
                              std::to_string(kMonomialOrderVersion) + "|" + field + "|" + object +
                              "|" + std::to_string(p) + "|" + std::to_string(q);
            nlohmann::ordered_json j;
            if (auto hit = cache.get(key)) {
                j = *hit;
            } else {
                j = basis_json(object, field, p, q);
                cache.put(key, j);
            }
            if (json_out) {
                out << j.dump(2) << "\n";
            } else {
                out << object << " basis at (" << p << "," << q << "), dim " << j["dim"] << ":\n";
                for (const auto& s : j["basis"]) out << "  " << s.get<std::string>() << "\n";
            }
            return 0;
        }
        if (act_cmd->parsed()) {
            PresetPtr preset = FieldPreset::by_flag(field);
            Algebra alg(preset);
            AElement x = parse_expr(alg, expr);
            Sq o = (op == "sq1") ? Sq::Sq1 : Sq::Sq2;
            if (op != "sq1" && op != "sq2") throw AlgebraError("bad --op (want sq1|sq2)");
            Side s = (side == "left") ? Side::Left : Side::Right;
            if (side != "left" && side != "right") throw AlgebraError("bad --side");
            AElement y = alg.act(o, s, x);
            if (json_out) {
                nlohmann::ordered_json j;
                j["schema_version"] = kSchemaVersion;
                j["field"] = preset->name();
                j["op"] = op;
                j["side"] = side;
                j["input"] = alg.str(x);
                j["result"] = alg.str(y);
                out << j.dump(2) << "\n";
            } else {
                out << alg.str(y) << "\n";
            }
            return 0;
        }
        if (pair_cmd->parsed()) {
            WContext wc(FieldPreset::by_flag(field));
            uint16_t iset = iset_str_arg.empty() ? 0 : parse_iset(iset_str_arg);
            HWHWPair pr = wc.theorem_generator(gen, iset, tj);
            if (json_out) {
                nlohmann::ordered_json j;
                j["schema_version"] = kSchemaVersion;
                j["field"] = wc.preset().name();
                j["gen"] = gen;
                j["pair"] = wc.str(pr);
                j["compatible"] = true;
                out << j.dump(2) << "\n";
            } else {
                out << wc.str(pr) << "\n";
            }
            return 0;
        }
        if (verify_cmd->parsed() || report_cmd->parsed()) {
            std::vector<std::string> suites;
            if (report_cmd->parsed() || suite == "all")
                suites = suite_names();
            else
                suites = {suite};
            bool all_ok = true;
            nlohmann::ordered_json jall = nlohmann::ordered_json::array();
            for (const std::string& s : suites) {
                VerificationReport rep = run_suite(s, opt);
                all_ok = all_ok && rep.all_passed();
                if (json_out)
                    jall.push_back(rep.to_json());
                else
                    out << rep.table();
            }
            if (json_out) out << (jall.size() == 1 ? jall[0] : jall).dump(2) << "\n";
            return all_ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "parse error at position " << e.position << " near '" << e.token
            << "': " << e.what() << "\n";
        return 2;
    } catch (const PredictorRefused& e) {
        err << "refused: " << e.what() << "\n";
        return 2;
    } catch (const PresetError& e) {
        err << "preset error: " << e.what() << "\n";
        return 2;
    } catch (const NotInSubalgebra& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace wsteen
