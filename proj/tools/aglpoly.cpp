// Command-line front end: construct single polyhedra, scan parameter
// spaces, survey predicted types, verify the non-existence facts, compute
// duals, and test pairwise isomorphism.
//
// Exit codes: 0 success, 2 invalid input or parameters, 3 internal
// invariant violation (a structural fact failed on computed data).

#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "aglpoly/census.hpp"

namespace {

using namespace aglpoly;

struct FieldArgs {
    std::uint64_t p = 0;
    std::uint64_t l = 1;
    std::vector<std::uint64_t> modulus;  // optional override, constant term first

    std::unique_ptr<Field> make() const {
        if (!modulus.empty()) return std::make_unique<Field>(p, l, modulus);
        return std::make_unique<Field>(p, l);
    }
};

void add_field_options(CLI::App& cmd, FieldArgs& args) {
    cmd.add_option("--p", args.p, "odd characteristic")->required();
    cmd.add_option("--l", args.l, "extension degree (default 1)");
    cmd.add_option("--modulus", args.modulus,
                   "modulus coefficients c0..cl, overriding the deterministic choice")
        ->delimiter(',');
}

void add_format_option(CLI::App& cmd, OutputFormat& format) {
    static const std::map<std::string, OutputFormat> names{
        {"json-lines", OutputFormat::json_lines},
        {"csv", OutputFormat::csv},
        {"table", OutputFormat::table}};
    cmd.add_option("--format", format, "output format (json-lines, csv, table)")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

int run(int argc, char** argv) {
    CLI::App app{"chiral and regular polyhedra from subgroups of AGL(1,q)"};
    app.require_subcommand(1);

    FieldArgs field_args;
    std::uint64_t a_enc = 0, b_enc = 0, c_enc = 0;
    std::uint64_t oracle_cutoff = kDefaultOracleCutoff;
    OutputFormat format = OutputFormat::table;

    auto* single = app.add_subcommand("single", "build and analyze one polyhedron");
    add_field_options(*single, field_args);
    single->add_option("--a", a_enc, "encoding of a")->required();
    single->add_option("--b", b_enc, "encoding of b")->required();
    single->add_option("--c", c_enc, "encoding of c")->required();
    single->add_option("--oracle-cutoff", oracle_cutoff,
                       "largest group order the exhaustive oracle will accept");
    add_format_option(*single, format);

    ScanConfig scan_config;
    std::uint64_t scan_p = 0, scan_l = 0, scan_max_q = 0;
    auto* scan = app.add_subcommand("scan", "sweep a parameter space and emit census rows");
    scan->add_option("--p", scan_p, "restrict to this characteristic");
    scan->add_option("--l", scan_l, "restrict to this extension degree");
    scan->add_option("--max-q", scan_max_q, "scan all odd prime powers 5 <= q <= max-q");
    static const std::map<std::string, ScanConfig::ParamSet> param_names{
        {"canonical", ScanConfig::ParamSet::canonical}, {"all", ScanConfig::ParamSet::all}};
    scan->add_option("--params", scan_config.params,
                     "parameter sweep: canonical (b=0, c=1 per admissible a) or all")
        ->transform(CLI::CheckedTransformer(param_names, CLI::ignore_case));
    scan->add_option("--oracle-cutoff", scan_config.oracle_cutoff,
                     "largest group order the exhaustive oracle will accept");
    scan->add_flag("--deterministic", scan_config.deterministic,
                   "single-threaded evaluation (output is canonical either way)");
    add_format_option(*scan, format);

    auto* survey = app.add_subcommand(
        "survey", "predicted vs constructed type for each divisor n > 2 of q-1");
    add_field_options(*survey, field_args);
    survey->add_option("--oracle-cutoff", oracle_cutoff,
                       "largest group order the exhaustive oracle will accept");
    add_format_option(*survey, format);

    std::uint64_t noregs_cutoff = 250;
    auto* noregs =
        app.add_subcommand("noregs", "verify the non-existence facts for this field");
    add_field_options(*noregs, field_args);
    noregs->add_option("--cutoff", noregs_cutoff, "largest q for the exhaustive checks");

    auto* dual_cmd = app.add_subcommand("dual", "parameters of the dual polyhedron");
    add_field_options(*dual_cmd, field_args);
    dual_cmd->add_option("--a", a_enc, "encoding of a")->required();
    dual_cmd->add_option("--b", b_enc, "encoding of b")->required();
    dual_cmd->add_option("--c", c_enc, "encoding of c")->required();
    add_format_option(*dual_cmd, format);

    FieldArgs field2_args;
    std::uint64_t a2_enc = 0, b2_enc = 0, c2_enc = 0;
    auto* isotest = app.add_subcommand(
        "isotest", "test for a generator-respecting isomorphism between two polyhedra");
    add_field_options(*isotest, field_args);
    isotest->add_option("--a", a_enc, "encoding of a")->required();
    isotest->add_option("--b", b_enc, "encoding of b")->required();
    isotest->add_option("--c", c_enc, "encoding of c")->required();
    auto* p2_opt = isotest->add_option("--p2", field2_args.p, "characteristic of the second field");
    isotest->add_option("--l2", field2_args.l, "extension degree of the second field");
    isotest->add_option("--modulus2", field2_args.modulus,
                        "modulus of the second field")
        ->delimiter(',');
    isotest->add_option("--a2", a2_enc, "encoding of the second a")->required();
    isotest->add_option("--b2", b2_enc, "encoding of the second b")->required();
    isotest->add_option("--c2", c2_enc, "encoding of the second c")->required();
    isotest->add_option("--oracle-cutoff", oracle_cutoff,
                        "largest group order the isomorphism search will accept");

    CLI11_PARSE(app, argc, argv);

    if (single->parsed()) {
        const auto field = field_args.make();
        const PolyhedronSpec spec{field->elem(a_enc), field->elem(b_enc), field->elem(c_enc)};
        const CensusRow row = flatten(run_single(spec, ClassifyOptions{oracle_cutoff, false}));
        write_rows(std::cout, {row}, format);
        return 0;
    }

    if (scan->parsed()) {
        if (scan_p != 0) scan_config.p = scan_p;
        if (scan_l != 0) scan_config.l = scan_l;
        if (scan_max_q != 0) scan_config.max_q = scan_max_q;
        const std::vector<CensusRow> rows = run_scan(scan_config, &std::cerr);
        write_rows(std::cout, rows, format);
        return 0;
    }

    if (survey->parsed()) {
        const auto field = field_args.make();
        const std::vector<SurveyRow> rows =
            run_survey(*field, ClassifyOptions{oracle_cutoff, false});
        write_survey(std::cout, rows, format);
        for (const SurveyRow& row : rows)
            require(row.match, errc::inconsistent_table,
                    "predicted type differs from the constructed type");
        return 0;
    }

    if (noregs->parsed()) {
        const auto field = field_args.make();
        const NoregsReport rep = verify_noregs(*field, noregs_cutoff);
        std::cout << "q=" << rep.q << " involutions=" << rep.involution_count
                  << " pairs=" << rep.involution_pairs
                  << " reflections-impossible: " << (rep.reflections_impossible ? "PASS" : "FAIL")
                  << '\n';
        std::cout << "q=" << rep.q << " triples=" << rep.involution_triples
                  << " rank-4-obstruction: " << (rep.rank4_obstruction ? "PASS" : "FAIL")
                  << '\n';
        std::cout << "q=" << rep.q << " specs=" << rep.specs_checked
                  << " orders-divide-q-1: " << (rep.orders_divide ? "PASS" : "FAIL") << '\n';
        require(rep.all_ok(), errc::inconsistent_table, "a non-existence check failed");
        return 0;
    }

    if (dual_cmd->parsed()) {
        const auto field = field_args.make();
        const PolyhedronSpec spec{field->elem(a_enc), field->elem(b_enc), field->elem(c_enc)};
        const PolyhedronSpec d = dual(spec);
        if (format == OutputFormat::table) {
            std::cout << "dual of (a=" << a_enc << ", b=" << b_enc << ", c=" << c_enc
                      << ") over GF(" << field->q() << "): a=" << d.a.enc()
                      << " b=" << d.b.enc() << " c=" << d.c.enc() << '\n';
        } else {
            std::cout << "{\"schema\":" << kSchemaVersion << ",\"p\":" << field->p()
                      << ",\"l\":" << field->l() << ",\"q\":" << field->q()
                      << ",\"a\":" << d.a.enc() << ",\"b\":" << d.b.enc()
                      << ",\"c\":" << d.c.enc() << "}\n";
        }
        return 0;
    }

    if (isotest->parsed()) {
        const auto field = field_args.make();
        const std::unique_ptr<Field> field2 = p2_opt->count() > 0 ? field2_args.make() : nullptr;
        const Field& f2 = field2 ? *field2 : *field;
        const PolyhedronSpec lhs{field->elem(a_enc), field->elem(b_enc), field->elem(c_enc)};
        const PolyhedronSpec rhs{f2.elem(a2_enc), f2.elem(b2_enc), f2.elem(c2_enc)};
        const bool iso = isomorphism_test(lhs, rhs, oracle_cutoff);
        std::cout << "isomorphic: " << (iso ? "true" : "false") << '\n';
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const aglpoly::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.is_internal() ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 3;
    }
}
