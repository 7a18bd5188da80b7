// Command-line front end: counting, bounds, table reproduction, code
// construction and verification, and brute-force oracles.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssc/code.hpp"
#include "ssc/constructions.hpp"
#include "ssc/covering.hpp"
#include "ssc/oracle.hpp"
#include "ssc/packing.hpp"
#include "ssc/tables.hpp"

using json = nlohmann::ordered_json;
using namespace ssc;

namespace {

enum class Format { text, json_fmt, csv };

struct Global {
    Format format = Format::text;
    uint64_t enum_limit = 100000000;
    unsigned precision = 50;

    mpfr_prec_t prec_bits() const { return (mpfr_prec_t)(precision * 4 + 64); }
};

Metric parse_metric(const std::string& s) {
    if (s == "subspace") return Metric::subspace;
    if (s == "injection") return Metric::injection;
    throw CLI::ValidationError("--metric must be subspace or injection");
}

mpq_class parse_rational(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    v.canonicalize();
    return v;
}

void emit_value(const Global& g, const std::string& name, const BigCount& value) {
    if (g.format == Format::json_fmt) {
        json out{{"name", name}, {"value", value.get_str()}};
        std::cout << out.dump(2) << "\n";
    } else if (g.format == Format::csv) {
        std::cout << name << "," << value.get_str() << "\n";
    } else {
        std::cout << name << " = " << value.get_str() << "\n";
    }
}

json interval_json(const BoundInterval& b) {
    return json{{"lower", b.lower.get_str()},
                {"upper", b.upper.get_str()},
                {"lower_provenance", b.lower_provenance},
                {"upper_provenance", b.upper_provenance}};
}

void emit_interval(const Global& g, const std::string& name, const BoundInterval& b) {
    if (g.format == Format::json_fmt) {
        json out = interval_json(b);
        out["name"] = name;
        std::cout << out.dump(2) << "\n";
    } else if (g.format == Format::csv) {
        std::cout << name << "," << b.lower.get_str() << "," << b.upper.get_str()
                  << "," << b.lower_provenance[0] << "," << b.upper_provenance[0]
                  << "\n";
    } else {
        std::cout << name << " in [" << b.lower.get_str() << ", "
                  << b.upper.get_str() << "]  (lower: " << b.lower_provenance[0]
                  << ", upper: " << b.upper_provenance[0] << ")\n";
    }
}

void emit_covering(const Global& g, const CoveringBoundReport& r) {
    if (g.format == Format::json_fmt) {
        json out{{"lower", r.lower.get_str()},
                 {"upper", r.upper.get_str()},
                 {"lp_value", r.lp_value.get_str()},
                 {"lower_provenance", r.lower_provenance},
                 {"upper_provenance", r.upper_provenance}};
        if (r.ilp_value) out["ilp_value"] = r.ilp_value->get_str();
        std::cout << out.dump(2) << "\n";
    } else if (g.format == Format::csv) {
        std::cout << r.lower.get_str() << "," << r.upper.get_str() << ","
                  << r.lp_value.get_str() << ","
                  << (r.ilp_value ? r.ilp_value->get_str() : "") << "\n";
    } else {
        std::cout << "K in [" << r.lower.get_str() << ", " << r.upper.get_str()
                  << "]  lp=" << r.lp_value.get_str();
        if (r.ilp_value) std::cout << " ilp=" << r.ilp_value->get_str();
        std::cout << "  (lower: " << r.lower_provenance[0]
                  << ", upper: " << r.upper_provenance[0] << ")\n";
    }
}

int emit_table(const Global& g, const TableReport& rep) {
    if (g.format == Format::json_fmt) {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back(json{
                {"d", r.d},
                {"published_lower_construction", r.published_lower_construction.get_str()},
                {"published_lower_refined", r.published_lower_refined.get_str()},
                {"published_upper", r.published_upper.get_str()},
                {"our_lower", r.our_lower.get_str()},
                {"our_upper", r.our_upper.get_str()},
                {"lower_relation", relation_name(r.lower_relation)},
                {"upper_relation", relation_name(r.upper_relation)},
                {"lower_ok", r.lower_ok},
                {"upper_ok", r.upper_ok}});
        std::cout << json{{"table", rep.which}, {"ok", rep.ok}, {"rows", rows}}.dump(2)
                  << "\n";
    } else if (g.format == Format::csv) {
        std::cout << "d,our_lower,our_upper,published_lower,published_upper,"
                     "lower_relation,upper_relation,ok\n";
        for (const auto& r : rep.rows)
            std::cout << r.d << "," << r.our_lower.get_str() << ","
                      << r.our_upper.get_str() << ","
                      << r.published_lower_refined.get_str() << ","
                      << r.published_upper.get_str() << ","
                      << relation_name(r.lower_relation) << ","
                      << relation_name(r.upper_relation) << ","
                      << (r.lower_ok && r.upper_ok ? "ok" : "MISMATCH") << "\n";
    } else {
        std::printf("%-4s %14s %14s %16s %14s  %-26s %s\n", "d", "our lower",
                    "our upper", "pub lower", "pub upper", "lower relation",
                    "upper relation");
        for (const auto& r : rep.rows)
            std::printf("%-4u %14s %14s %16s %14s  %-26s %s%s\n", r.d,
                        r.our_lower.get_str().c_str(), r.our_upper.get_str().c_str(),
                        r.published_lower_refined.get_str().c_str(),
                        r.published_upper.get_str().c_str(),
                        relation_name(r.lower_relation).c_str(),
                        relation_name(r.upper_relation).c_str(),
                        r.lower_ok && r.upper_ok ? "" : "  MISMATCH");
        std::cout << (rep.ok ? "all relations hold\n" : "MISMATCH\n");
    }
    return rep.ok ? 0 : 2;
}

void write_code(const Code& code, const std::string& path) {
    if (path.empty() || path == "-")
        write_code_file(code, std::cout);
    else
        write_code_file(code, path);
}

// Oracle-check a construction's claim when the space is small enough to
// enumerate quickly; larger codes stay marked unverified.
void try_verify(Code& code, uint64_t enum_limit) {
    BigCount space = projective_space_size((unsigned long)code.field->q(), code.n);
    if (space > 5000 || space > enum_limit) return;
    if (code.meta.min_distance && code.size() >= 2) {
        uint32_t got = brute_min_distance(code, *code.meta.metric);
        code.meta.verified = got == *code.meta.min_distance;
    } else if (code.meta.covering_radius) {
        uint32_t got = brute_covering_radius(code, *code.meta.metric, enum_limit);
        code.meta.verified = got <= *code.meta.covering_radius;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subspace-code bounds, constructions, and oracles"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --format/--enum-limit/--precision follow the subcommand

    Global g;
    std::string fmt = "text";
    app.add_option("--format", fmt, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--enum-limit", g.enum_limit, "refuse enumerations beyond this count");
    app.add_option("--precision", g.precision, "decimal digits for real-valued bounds")
        ->check(CLI::Range(1u, 100u));

    unsigned long q = 2;
    uint32_t n = 0, r = 0, s = 0, d = 0, t = 0, rho = 0;
    std::string metric_name = "subspace";
    std::string file, out_path, check, kind, which = "1";
    std::string dprime, rprime = "0";
    bool run_ilp = false;

    // count
    auto* count = app.add_subcommand("count", "exact q-analog counts");
    auto* cbin = count->add_subcommand("binomial", "Gaussian binomial [n r]_q");
    cbin->add_option("-q", q)->required();
    cbin->add_option("-n", n)->required();
    cbin->add_option("-r", r)->required();
    auto* cspace = count->add_subcommand("space", "|E(q,n)|");
    cspace->add_option("-q", q)->required();
    cspace->add_option("-n", n)->required();
    auto* cpairs = count->add_subcommand("pairs",
                                         "subspaces of dimension s at distance d from a dimension-r center");
    cpairs->add_option("-q", q)->required();
    cpairs->add_option("-n", n)->required();
    cpairs->add_option("-r", r)->required();
    cpairs->add_option("-s", s)->required();
    cpairs->add_option("-d", d)->required();
    cpairs->add_option("--metric", metric_name);
    count->require_subcommand(1);

    // volume
    auto* volume = app.add_subcommand("volume", "ball volume V(r,t)");
    volume->add_option("-q", q)->required();
    volume->add_option("-n", n)->required();
    volume->add_option("-r", r)->required();
    volume->add_option("-t", t)->required();
    volume->add_option("--metric", metric_name);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "packing and covering bounds");
    auto* bpack = bounds->add_subcommand("packing", "bounds on the maximum code size");
    bpack->add_option("-q", q)->required();
    bpack->add_option("-n", n)->required();
    bpack->add_option("-d", d)->required();
    bpack->add_option("--metric", metric_name);
    auto* bcdc = bounds->add_subcommand("cdc", "constant-dimension code bounds");
    bcdc->add_option("-q", q)->required();
    bcdc->add_option("-n", n)->required();
    bcdc->add_option("-r", r)->required();
    bcdc->add_option("-d", d)->required();
    auto* bcov = bounds->add_subcommand("covering", "bounds on the minimum covering code size");
    bcov->add_option("-q", q)->required();
    bcov->add_option("-n", n)->required();
    bcov->add_option("--rho", rho)->required();
    bcov->add_option("--metric", metric_name);
    bcov->add_flag("--ilp", run_ilp, "solve the sphere-covering program to integer optimality");
    bounds->require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "reproduce the published comparison tables");
    table->add_option("--which", which, "1/I (subspace) or 2/II (injection)");

    // construct
    auto* construct = app.add_subcommand("construct", "build a code and write a code file");
    auto* ckk = construct->add_subcommand("kk", "lifted MRD code");
    ckk->add_option("-q", q)->required();
    ckk->add_option("-n", n)->required();
    ckk->add_option("-r", r)->required();
    ckk->add_option("-d", d)->required();
    ckk->add_option("-o,--output", out_path);
    auto* clay = construct->add_subcommand("layered", "layered lifted-MRD packing code");
    clay->add_option("-q", q)->required();
    clay->add_option("-n", n)->required();
    clay->add_option("-d", d)->required();
    clay->add_option("--metric", metric_name);
    clay->add_option("-o,--output", out_path);
    auto* cun = construct->add_subcommand("union", "union-of-Grassmannians cover");
    cun->add_option("-q", q)->required();
    cun->add_option("-n", n)->required();
    cun->add_option("--rho", rho)->required();
    cun->add_option("-o,--output", out_path);
    auto* cgr = construct->add_subcommand("greedy", "greedy cover");
    cgr->add_option("-q", q)->required();
    cgr->add_option("-n", n)->required();
    cgr->add_option("--rho", rho)->required();
    cgr->add_option("--metric", metric_name);
    cgr->add_option("-o,--output", out_path);
    auto* ctr = construct->add_subcommand("trivial", "{{0}, full space}");
    ctr->add_option("-q", q)->required();
    ctr->add_option("-n", n)->required();
    ctr->add_option("-o,--output", out_path);
    construct->require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a code file's claim by brute force");
    verify->add_option("--file", file)->required();
    verify->add_option("--check", check, "min-distance or covering-radius")
        ->required()
        ->check(CLI::IsMember({"min-distance", "covering-radius"}));
    verify->add_option("--metric", metric_name);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    auto* oprof = oracle->add_subcommand("profile", "distance histogram around a dimension-r center");
    oprof->add_option("-q", q)->required();
    oprof->add_option("-n", n)->required();
    oprof->add_option("-r", r)->required();
    oprof->add_option("--metric", metric_name);
    auto* orad = oracle->add_subcommand("radius", "exact covering radius of a code file");
    orad->add_option("--file", file)->required();
    orad->add_option("--metric", metric_name);
    auto* omin = oracle->add_subcommand("mindist", "exact minimum distance of a code file");
    omin->add_option("--file", file)->required();
    omin->add_option("--metric", metric_name);
    auto* omax = oracle->add_subcommand("maxpack", "exact maximum packing (tiny spaces)");
    omax->add_option("-q", q)->required();
    omax->add_option("-n", n)->required();
    omax->add_option("-d", d)->required();
    omax->add_option("--metric", metric_name);
    oracle->require_subcommand(1);

    // rates
    auto* rates = app.add_subcommand("rates", "closed-form asymptotic rates");
    rates->add_option("--kind", kind, "a_S, a_S_cdc, a_I, a_I_cdc, k_S, k_I")
        ->required()
        ->check(CLI::IsMember({"a_S", "a_S_cdc", "a_I", "a_I_cdc", "k_S", "k_I"}));
    rates->add_option("--dprime", dprime, "normalized distance / covering radius (rational)")
        ->required();
    rates->add_option("--rprime", rprime, "normalized dimension (rational)");

    CLI11_PARSE(app, argc, argv);
    g.format = fmt == "json" ? Format::json_fmt : fmt == "csv" ? Format::csv : Format::text;

    try {
        Metric metric = parse_metric(metric_name);
        if (cbin->parsed()) {
            emit_value(g, "binomial", gaussian_binomial(q, n, r));
        } else if (cspace->parsed()) {
            emit_value(g, "space", projective_space_size(q, n));
        } else if (cpairs->parsed()) {
            BigCount v = metric == Metric::subspace ? n_subspace(q, n, r, s, d)
                                                    : n_injection(q, n, r, s, d);
            emit_value(g, "pairs", v);
        } else if (volume->parsed()) {
            emit_value(g, "volume", ball_volume(q, n, r, t, metric));
        } else if (bpack->parsed()) {
            BoundInterval b = metric == Metric::subspace
                                  ? subspace_packing_bounds(q, n, d)
                                  : injection_packing_bounds(q, n, d);
            emit_interval(g, "packing", b);
        } else if (bcdc->parsed()) {
            emit_interval(g, "cdc", cdc_bounds(q, n, r, d));
        } else if (bcov->parsed()) {
            emit_covering(g, covering_bounds(q, n, rho, metric, run_ilp));
        } else if (table->parsed()) {
            int w = (which == "2" || which == "II") ? 2 : 1;
            return emit_table(g, reproduce_table(w));
        } else if (construct->parsed()) {
            Code code;
            if (ckk->parsed()) code = kk_code(q, n, r, d, g.enum_limit);
            else if (clay->parsed()) code = layered_packing_code(q, n, d, metric, g.enum_limit);
            else if (cun->parsed()) code = grassmann_union_code(q, n, rho, g.enum_limit);
            else if (cgr->parsed()) code = greedy_cover(q, n, rho, metric, g.enum_limit);
            else code = trivial_covering_code(q, n);
            try_verify(code, g.enum_limit);
            write_code(code, out_path);
        } else if (verify->parsed()) {
            Code code = read_code_file(file);
            uint32_t got;
            std::optional<uint32_t> claim;
            bool ok;
            if (check == "min-distance") {
                got = brute_min_distance(code, metric);
                claim = code.meta.min_distance;
                ok = claim && got == *claim;
            } else {
                got = brute_covering_radius(code, metric, g.enum_limit);
                claim = code.meta.covering_radius;
                ok = claim && got <= *claim;
            }
            if (g.format == Format::json_fmt) {
                json out{{"check", check},
                         {"computed", got},
                         {"ok", ok}};
                if (claim) out["claimed"] = *claim;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << check << ": computed " << got;
                if (claim) std::cout << ", claimed " << *claim;
                std::cout << (ok ? "  OK" : "  MISMATCH") << "\n";
            }
            return ok ? 0 : 2;
        } else if (oprof->parsed()) {
            FieldPtr f = field_from_order(q);
            AmbientSpace space(f, n, g.enum_limit);
            std::vector<std::vector<uint32_t>> rows(r, std::vector<uint32_t>(n, 0));
            for (uint32_t i = 0; i < r; ++i) rows[i][i] = 1;
            Subspace center = r == 0 ? zero_subspace(f, n) : canonicalize(f, n, rows);
            DistanceProfile prof = brute_distance_profile(space, center, metric);
            if (g.format == Format::json_fmt) {
                json hist = json::array();
                for (const auto& [key, cnt] : prof.histogram)
                    hist.push_back(json{{"s", key.first}, {"d", key.second},
                                        {"count", cnt.get_str()}});
                std::cout << json{{"r", r}, {"histogram", hist}}.dump(2) << "\n";
            } else {
                for (const auto& [key, cnt] : prof.histogram)
                    std::cout << "s=" << key.first << " d=" << key.second << " count="
                              << cnt.get_str() << "\n";
            }
        } else if (orad->parsed()) {
            Code code = read_code_file(file);
            emit_value(g, "covering-radius",
                       BigCount(brute_covering_radius(code, metric, g.enum_limit)));
        } else if (omin->parsed()) {
            Code code = read_code_file(file);
            emit_value(g, "min-distance", BigCount(brute_min_distance(code, metric)));
        } else if (omax->parsed()) {
            emit_value(g, "max-packing", brute_max_packing(q, n, d, metric));
        } else if (rates->parsed()) {
            RateQuery query;
            query.kind = kind == "a_S"       ? RateQuery::Kind::a_S
                         : kind == "a_S_cdc" ? RateQuery::Kind::a_S_cdc
                         : kind == "a_I"     ? RateQuery::Kind::a_I
                         : kind == "a_I_cdc" ? RateQuery::Kind::a_I_cdc
                         : kind == "k_S"     ? RateQuery::Kind::k_S
                                             : RateQuery::Kind::k_I;
            query.dprime = parse_rational(dprime);
            query.rprime = parse_rational(rprime);
            mpq_class rate = asymptotic_rate(query);
            if (g.format == Format::json_fmt)
                std::cout << json{{"kind", kind}, {"rate", rate.get_str()}}.dump(2)
                          << "\n";
            else
                std::cout << kind << " = " << rate.get_str() << "\n";
        }
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const NodeBudgetExceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const FieldTooLarge& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
