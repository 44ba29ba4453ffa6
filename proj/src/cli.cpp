#include "alcove/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove/expr.hpp"
#include "alcove/profiles.hpp"
#include "alcove/verify.hpp"

namespace alcove {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string family = "A";
    int rank = 2;
    Coord ell = 0;
    std::string format = "text";
    std::string cache_dir;
    std::string rules_file;
};

Weight parse_weight_arg(const std::string& text, int rank) {
    std::vector<Coord> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t used = 0;
        coords.push_back(std::stoll(part, &used));
        if (used != part.size()) throw std::invalid_argument("bad weight coordinate '" + part + "'");
    }
    if (static_cast<int>(coords.size()) != rank)
        throw std::invalid_argument("weight '" + text + "' has " + std::to_string(coords.size()) +
                                    " coordinates, rank is " + std::to_string(rank));
    return Weight(std::move(coords));
}

std::shared_ptr<const RootSystem> make_rs(const Options& opt) {
    if (opt.family.size() != 1) throw std::invalid_argument("family must be one letter A..G");
    RootSystemSpec spec{family_from_char(opt.family[0]), opt.rank};
    return RootSystem::build(spec);
}

EllContext make_ctx(const Options& opt) {
    if (opt.ell == 0) throw std::invalid_argument("this command needs --ell");
    return EllContext(make_rs(opt), opt.ell);
}

PrincipalFusionRule load_rules(const EllContext& ctx, const Options& opt) {
    if (!opt.rules_file.empty()) {
        std::ifstream in(opt.rules_file);
        if (!in) throw std::runtime_error("cannot read rules file " + opt.rules_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return PrincipalFusionRule::from_json(ctx, ss.str());
    }
    if (ctx.rs().spec().family == Family::A && ctx.rs().rank() == 2) return builtin_a2_rules(ctx);
    return PrincipalFusionRule(static_cast<char>(ctx.rs().spec().family), ctx.rs().rank());
}

ordered_json weight_json(const Weight& w) {
    ordered_json a = ordered_json::array();
    for (Coord c : w.coords()) a.push_back(c);
    return a;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---- subcommand bodies ----------------------------------------------------

void cmd_info(const Options& opt, std::ostream& out) {
    auto rs = make_rs(opt);
    ordered_json j;
    j["family"] = opt.family;
    j["rank"] = rs->rank();
    j["coxeter_number"] = rs->coxeter_number();
    j["fundamental_group_order"] = rs->fundamental_group_order();
    j["positive_roots"] = rs->positive_roots().size();
    j["highest_root"] = weight_json(rs->highest_root().coords);
    j["highest_short_root"] = weight_json(rs->highest_short_root().coords);

    std::optional<EllContext> ctx;
    if (opt.ell != 0) {
        ctx.emplace(rs, opt.ell);
        j["ell"] = opt.ell;
        ordered_json ws = ordered_json::array();
        for (const auto& w : ctx->alcove_weights()) ws.push_back(weight_json(w));
        j["alcove_weights"] = ws;
        ordered_json om = ordered_json::array();
        const Weight zero(static_cast<std::size_t>(rs->rank()));
        for (const auto& o : ctx->omega_group())
            om.push_back(weight_json(ctx->dot_act(o.elem, zero)));
        j["omega_dot_zero"] = om;
    }

    if (opt.format == "json") {
        out << j.dump() << "\n";
        return;
    }
    out << "type " << opt.family << rs->rank() << ": h=" << rs->coxeter_number()
        << " |Phi+|=" << rs->positive_roots().size() << " f=" << rs->fundamental_group_order()
        << "\n";
    out << "highest root " << rs->highest_root().coords.str() << ", highest short root "
        << rs->highest_short_root().coords.str() << "\n";
    if (ctx) {
        out << "ell=" << opt.ell << ", alcove weights:";
        for (const auto& w : ctx->alcove_weights()) out << " (" << w.str() << ")";
        out << "\n";
        const Weight zero(static_cast<std::size_t>(rs->rank()));
        out << "Omega . 0:";
        for (const auto& o : ctx->omega_group()) out << " (" << ctx->dot_act(o.elem, zero).str() << ")";
        out << "\n";
        if (rs->spec().family == Family::A && rs->rank() == 2) {
            const auto rules = builtin_a2_rules(*ctx);
            for (const auto& [name, info] : rules.customs()) {
                out << name << " layers:";
                for (std::size_t i = 0; i < info.radical_layers.size(); ++i) {
                    if (i) out << " |";
                    for (const auto& w : info.radical_layers[i]) out << " " << w;
                }
                out << "\n" << info.grothendieck << "\n";
            }
        }
    }
}

void cmd_reduce(const Options& opt, const std::string& weight_arg, std::ostream& out) {
    EllContext ctx = make_ctx(opt);
    const Weight tau = parse_weight_arg(weight_arg, opt.rank);
    const ReductionResult red = ctx.reduce(tau);
    if (opt.format == "json") {
        ordered_json j;
        j["singular"] = red.is_singular();
        if (red.is_singular()) {
            j["beta"] = red.singular->beta;
            j["beta_root"] = weight_json(ctx.rs().positive_roots()[red.singular->beta].coords);
            j["m"] = red.singular->m;
        } else {
            j["x"] = ctx.word_of(red.x);
            j["lambda"] = weight_json(red.lambda);
            j["sign"] = red.sign;
            j["len"] = red.length;
        }
        out << j.dump() << "\n";
        return;
    }
    if (red.is_singular()) {
        const std::string line = "singular beta=" + std::to_string(red.singular->beta) +
                                 " m=" + std::to_string(red.singular->m);
        if (opt.format == "csv")
            out << "singular,beta,m\ntrue," << red.singular->beta << "," << red.singular->m << "\n";
        else
            out << line << "\n";
        return;
    }
    if (opt.format == "csv") {
        out << "x,lambda,sign,len\n"
            << ctx.word_of(red.x) << "," << csv_quote(red.lambda.str()) << "," << red.sign << ","
            << red.length << "\n";
        return;
    }
    out << "x=" << ctx.word_of(red.x) << " lambda=" << red.lambda.str() << " sign=" << red.sign
        << " len=" << red.length << "\n";
}

void cmd_fuse(const Options& opt, const std::string& lhs_arg, const std::string& rhs_arg,
              std::ostream& out) {
    EllContext ctx = make_ctx(opt);
    const Weight l = parse_weight_arg(lhs_arg, opt.rank);
    const Weight m = parse_weight_arg(rhs_arg, opt.rank);
    if (!ctx.in_fundamental_alcove(l) || !ctx.in_fundamental_alcove(m))
        throw std::domain_error("fuse: weights must lie in C_fund cap X");
    const FusionRow row = fusion_row(ctx, l, m);
    if (opt.format == "json") {
        ordered_json j;
        j["lhs"] = weight_json(l);
        j["rhs"] = weight_json(m);
        ordered_json o = ordered_json::array();
        for (const auto& [nu, c] : row) {
            ordered_json e;
            e["n"] = weight_json(nu);
            e["c"] = c;
            o.push_back(e);
        }
        j["out"] = o;
        out << j.dump() << "\n";
        return;
    }
    if (opt.format == "csv") {
        out << "nu,c\n";
        for (const auto& [nu, c] : row) out << csv_quote(nu.str()) << "," << c << "\n";
        return;
    }
    for (const auto& [nu, c] : row) out << "nu=" << nu.str() << " c=" << c << "\n";
}

void cmd_fusion_table(const Options& opt, std::ostream& out) {
    EllContext ctx = make_ctx(opt);
    FusionTable::Meta meta{static_cast<char>(ctx.rs().spec().family), ctx.rs().rank(), ctx.ell()};

    bool from_cache = false;
    FusionTable table;
    std::filesystem::path cache_path;
    if (!opt.cache_dir.empty()) cache_path = std::filesystem::path(opt.cache_dir) / cache_file_name(meta);
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        table = load_table(cache_path.string());
        from_cache = true;
    } else {
        table = build_table(ctx);
        if (!cache_path.empty()) save_table(table, opt.cache_dir);
    }

    if (opt.format == "json") {
        out << table.file_json() << "\n";
        return;
    }
    if (opt.format == "csv") {
        out << "l,m,n,c\n";
        for (const auto& [key, row] : table.entries())
            for (const auto& [nu, c] : row)
                out << csv_quote(key.first.str()) << "," << csv_quote(key.second.str()) << ","
                    << csv_quote(nu.str()) << "," << c << "\n";
        return;
    }
    out << "family=" << opt.family << " rank=" << opt.rank << " ell=" << opt.ell
        << " weights=" << table.weights().size() << " pairs=" << table.entries().size()
        << " digest=" << table.digest() << " source=" << (from_cache ? "cache" : "cold") << "\n";
}

RegObject atom_to_object(const EllContext& ctx, const ExprAtom& atom) {
    const Weight zero(static_cast<std::size_t>(ctx.rs().rank()));
    const Weight w = atom.weight.value_or(zero);
    RegObject obj;
    switch (atom.kind) {
        case LabelKind::Simple:
            obj.add(ObjLabel::simple(ctx, ctx.element_from_word(atom.word), w));
            break;
        case LabelKind::Weyl:
            obj.add(ObjLabel::weyl(ctx, ctx.element_from_word(atom.word), w));
            break;
        case LabelKind::Tilting: obj.add(ObjLabel::tilting(ctx, w)); break;
        case LabelKind::Custom:
            obj.add(ObjLabel::from_weight(ctx, LabelKind::Custom, w, atom.name));
            break;
    }
    return obj;
}

void emit_object(const EllContext& ctx, const RegObject& obj, const std::string& expr,
                 const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        ordered_json j;
        j["expr"] = expr;
        ordered_json o = ordered_json::array();
        for (const auto& [label, mult] : obj.items()) {
            ordered_json e;
            e["kind"] = kind_name(label.kind());
            if (label.kind() == LabelKind::Custom) e["name"] = label.name();
            e["w"] = label.x().is_identity() ? "e" : ctx.word_of(label.x());
            e["lambda"] = weight_json(label.slot());
            e["mult"] = mult;
            o.push_back(e);
        }
        j["out"] = o;
        out << j.dump() << "\n";
        return;
    }
    if (opt.format == "csv") {
        out << "label,mult\n";
        for (const auto& [label, mult] : obj.items())
            out << csv_quote(label.str(ctx)) << "," << mult << "\n";
        return;
    }
    out << obj.str(ctx) << "\n";
}

void cmd_regpart(const Options& opt, const std::string& expr_text, std::ostream& out) {
    EllContext ctx = make_ctx(opt);
    const PrincipalFusionRule rules = load_rules(ctx, opt);
    const ObjExpr expr = parse_expr(expr_text, opt.rank);
    RegObject acc = atom_to_object(ctx, expr.atoms.at(0)).filtered_regular();
    for (std::size_t i = 1; i < expr.atoms.size(); ++i)
        acc = regpart_tensor_obj(ctx, rules, nullptr, acc, atom_to_object(ctx, expr.atoms[i]));
    emit_object(ctx, acc, expr_text, opt, out);
}

void cmd_gfd(const Options& opt, const std::string& expr_text, std::ostream& out) {
    EllContext ctx = make_ctx(opt);
    const ObjExpr expr = parse_expr(expr_text, opt.rank);
    std::vector<ObjLabel> labels;
    const Weight zero(static_cast<std::size_t>(ctx.rs().rank()));
    for (const auto& atom : expr.atoms) {
        const Weight w = atom.weight.value_or(zero);
        if (atom.kind == LabelKind::Simple)
            labels.push_back(ObjLabel::simple(ctx, ctx.element_from_word(atom.word), w));
        else if (atom.kind == LabelKind::Weyl)
            labels.push_back(ObjLabel::weyl(ctx, ctx.element_from_word(atom.word), w));
        else
            throw std::domain_error("gfd: factors must be L or Delta atoms");
    }
    const GfdResult r = gfd_tensor(ctx, labels);
    if (opt.format == "json") {
        ordered_json j;
        j["gfd"] = r.gfd;
        j["strongly_regular"] = r.strongly_regular;
        out << j.dump() << "\n";
        return;
    }
    out << "gfd=" << r.gfd << " strongly_regular=" << (r.strongly_regular ? "true" : "false")
        << "\n";
}

void cmd_profile(const Options& opt, const std::string& kind, const std::string& word_arg,
                 const std::string& lambda_arg, std::ostream& out) {
    EllContext ctx = make_ctx(opt);
    std::vector<int> letters;
    if (word_arg != "e") {
        // reuse the expression grammar for the word
        const ObjExpr probe = parse_expr("L(" + word_arg + ")", opt.rank);
        letters = probe.atoms.at(0).word;
    }
    const ExtAffineElement x = ctx.element_from_word(letters);
    const Weight lambda = parse_weight_arg(lambda_arg, opt.rank);
    const ComplexProfile profile = kind == "weyl" ? weyl_profile(ctx, x, lambda)
                                                  : simple_profile(ctx, x, lambda);
    if (opt.format == "json") {
        ordered_json j;
        j["kind"] = kind;
        j["symmetric"] = profile.symmetric();
        ordered_json ds = ordered_json::array();
        for (const auto& [i, c] : profile.stored()) {
            ordered_json d;
            d["i"] = i;
            if (c.exactly) d["exactly"] = weight_json(*c.exactly);
            if (c.contains) d["contains"] = weight_json(*c.contains);
            d["negligible"] = c.negligible;
            if (c.support) {
                ordered_json s = ordered_json::array();
                for (const auto& w : *c.support) s.push_back(weight_json(w));
                d["support"] = s;
            }
            ds.push_back(d);
        }
        j["degrees"] = ds;
        out << j.dump() << "\n";
        return;
    }
    out << "kind=" << kind << " symmetric=" << (profile.symmetric() ? "true" : "false") << "\n";
    for (const auto& [i, c] : profile.stored()) out << "i=" << i << ": " << c.str() << "\n";
}

int cmd_verify(const Options& opt, std::ostream& out) {
    EllContext ctx = make_ctx(opt);
    bool all_ok = true;
    for (const auto& r : run_verification(ctx)) {
        out << (r.ok ? "[ ok ] " : "[FAIL] ") << r.name;
        if (!r.ok) out << ": " << r.detail;
        out << "\n";
        all_ok = all_ok && r.ok;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"alcove: exact alcove combinatorics, Verlinde fusion rules and regular parts"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name

    Options opt;
    if (const char* env = std::getenv("ALCOVE_CACHE")) opt.cache_dir = env;
    app.add_option("--family", opt.family, "simple type A..G")->capture_default_str();
    app.add_option("--rank", opt.rank, "rank of the root system")->capture_default_str();
    app.add_option("--ell", opt.ell, "dilation parameter, at least the Coxeter number");
    app.add_option("--format", opt.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--cache", opt.cache_dir, "fusion table cache directory (env ALCOVE_CACHE)");
    app.add_option("--rules", opt.rules_file, "principal-block fusion rule file (JSON)");

    auto* info = app.add_subcommand("info", "root system and context data");
    auto* reduce = app.add_subcommand("reduce", "reduce a weight to the fundamental alcove");
    std::string weight_arg;
    reduce->add_option("--weight", weight_arg, "weight in fundamental-weight coordinates")->required();
    auto* fuse = app.add_subcommand("fuse", "fusion row of two alcove weights");
    std::string lhs_arg, rhs_arg;
    fuse->add_option("--lhs", lhs_arg)->required();
    fuse->add_option("--rhs", rhs_arg)->required();
    auto* ftable = app.add_subcommand("fusion-table", "build or load the full fusion table");
    auto* regpart = app.add_subcommand("regpart", "regular part of a tensor product expression");
    std::string expr_arg;
    regpart->add_option("expr", expr_arg, "e.g. \"L(s0;1,1) * L(s0;1,1)\"")->required();
    auto* gfdcmd = app.add_subcommand("gfd", "good filtration dimension of a tensor product");
    std::string gfd_expr;
    gfdcmd->add_option("expr", gfd_expr, "e.g. \"L(s0;0,0) * Delta(s0s1;1,0)\"")->required();
    auto* profile = app.add_subcommand("profile", "minimal tilting complex profile");
    std::string prof_kind = "weyl", prof_word = "e", prof_lambda;
    profile->add_option("--kind", prof_kind)->check(CLI::IsMember({"weyl", "simple"}));
    profile->add_option("--word", prof_word, "element word, e.g. s0s1");
    profile->add_option("--lambda", prof_lambda, "alcove weight")->required();
    auto* verify = app.add_subcommand("verify", "run the invariant verification suites");

    try {
        std::reverse(args.begin(), args.end()); // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (info->parsed()) cmd_info(opt, out);
        else if (reduce->parsed()) cmd_reduce(opt, weight_arg, out);
        else if (fuse->parsed()) cmd_fuse(opt, lhs_arg, rhs_arg, out);
        else if (ftable->parsed()) cmd_fusion_table(opt, out);
        else if (regpart->parsed()) cmd_regpart(opt, expr_arg, out);
        else if (gfdcmd->parsed()) cmd_gfd(opt, gfd_expr, out);
        else if (profile->parsed()) cmd_profile(opt, prof_kind, prof_word, prof_lambda, out);
        else if (verify->parsed()) return cmd_verify(opt, out);
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace alcove
