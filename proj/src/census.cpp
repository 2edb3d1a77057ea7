#include "aglpoly/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace aglpoly {

CensusRow flatten(const PolyhedronReport& report) {
    const Field& f = report.spec.field();
    CensusRow row;
    row.p = f.p();
    row.l = f.l();
    row.q = f.q();
    row.modulus = f.modulus();
    row.a = report.spec.a.enc();
    row.b = report.spec.b.enc();
    row.c = report.spec.c.enc();
    row.m = report.structure.a_exponent;
    row.s = report.s;
    row.t = report.t;
    row.f0 = report.f0;
    row.f1 = report.f1;
    row.f2 = report.f2;
    row.chi = report.euler;
    row.genus = report.genus;
    row.group_order = report.group_order;
    row.decomposition = report.structure.decomposition;
    row.is_full_agl = report.structure.is_full_group;
    if (report.chirality.has_value()) {
        row.chirality = report.chirality->status;
        row.method = report.chirality->method;
        if (report.chirality->witness.has_value()) {
            const Witness& w = *report.chirality->witness;
            if (const auto* semi = std::get_if<SemiAffineMap>(&w)) {
                row.semi_affine_witness = CensusRow::SemiAffineWitnessData{
                    semi->a().enc(), semi->b().enc(), semi->frob_exponent()};
            } else {
                const auto& gi = std::get<GeneratorImageWitness>(w);
                row.generator_image_witness = CensusRow::GeneratorImageData{
                    gi.sigma2_image.a().enc(), gi.sigma2_image.b().enc(),
                    gi.tau_image.a().enc(), gi.tau_image.b().enc()};
            }
        }
    }
    return row;
}

PolyhedronReport run_single(const PolyhedronSpec& spec, const ClassifyOptions& opts) {
    const GeneratorTriple triple = make_generators(spec);
    const GroupTable table = GroupTable::closure(triple);

    const FacePoset poset = build_poset(table);
    require(check_diamond_property(poset), errc::inconsistent_table,
            "face poset violates the diamond condition");
    require(check_flag_connectivity(poset), errc::inconsistent_table,
            "flag graph is disconnected");

    PolyhedronReport report = schlafli_and_genus(table, spec);
    report.chirality = classify(spec, table, report.structure, opts);
    return report;
}

namespace {

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<std::size_t>(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& th : pool) th.join();
}

struct ScanTask {
    const Field* field;
    std::uint64_t a, b, c;
};

bool tables_isomorphic(const GroupTable& lhs, const GroupTable& rhs) {
    if (lhs.size() != rhs.size()) return false;
    return extend_generator_map(lhs, lhs.sigma2(), lhs.tau(), rhs, rhs.sigma2(), rhs.tau())
        .has_value();
}

}  // namespace

std::vector<CensusRow> run_scan(const ScanConfig& config, std::ostream* log) {
    // Field list, sorted by q.
    std::vector<PrimePower> pps;
    if (config.max_q.has_value()) {
        require(*config.max_q >= 5, errc::invalid_argument, "max_q must be at least 5");
        for (const PrimePower& pp : odd_prime_powers_up_to(*config.max_q)) {
            if (pp.q < 5) continue;
            if (config.p.has_value() && pp.p != *config.p) continue;
            if (config.l.has_value() && pp.l != *config.l) continue;
            pps.push_back(pp);
        }
    } else {
        require(config.p.has_value(), errc::invalid_argument,
                "scan needs --p (with optional --l) or --max-q");
        pps.push_back(PrimePower::make(*config.p, config.l.value_or(1)));
        require(pps.back().q >= 5, errc::q_too_small, "q must be at least 5");
    }

    std::vector<std::unique_ptr<Field>> fields;
    std::vector<ScanTask> tasks;
    for (const PrimePower& pp : pps) {
        fields.push_back(std::make_unique<Field>(pp.p, pp.l));
        const Field& f = *fields.back();
        const std::uint64_t q = f.q();
        const std::uint64_t minus_one = (-f.one()).enc();
        for (std::uint64_t a = 2; a < q; ++a) {
            if (a == minus_one) continue;
            if (config.params == ScanConfig::ParamSet::canonical) {
                tasks.push_back({&f, a, 0, 1});
            } else {
                for (std::uint64_t b = 0; b < q; ++b)
                    for (std::uint64_t c = 0; c < q; ++c) {
                        const PolyhedronSpec spec{f.elem(a), f.elem(b), f.elem(c)};
                        if (spec.translation_seed().is_zero()) continue;
                        tasks.push_back({&f, a, b, c});
                    }
            }
        }
    }

    struct Slot {
        std::optional<CensusRow> row;
        std::string error;
    };
    std::vector<Slot> slots(tasks.size());
    const ClassifyOptions opts{config.oracle_cutoff, false};

    parallel_for(
        tasks.size(), config.deterministic ? 1 : config.threads, [&](std::size_t i) {
            const ScanTask& task = tasks[i];
            try {
                const PolyhedronSpec spec{task.field->elem(task.a), task.field->elem(task.b),
                                          task.field->elem(task.c)};
                slots[i].row = flatten(run_single(spec, opts));
            } catch (const std::exception& ex) {
                slots[i].error = ex.what();
            }
        });

    // Isomorphism-class labels: first matching representative wins; classes
    // refine equality of (q, s, t, genus, group_order, chirality).
    const auto make_spec = [&](const ScanTask& task) {
        return PolyhedronSpec{task.field->elem(task.a), task.field->elem(task.b),
                              task.field->elem(task.c)};
    };
    std::vector<CensusRow> rows;
    struct Representative {
        std::size_t task_index;  // into tasks, to rebuild the group
        std::size_t row_index;   // into rows, for the cheap signature filter
        std::uint64_t cls;
    };
    std::vector<Representative> reps;
    std::uint64_t next_class = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i].row.has_value()) {
            if (log != nullptr)
                *log << "skipped (p=" << tasks[i].field->p() << ", l=" << tasks[i].field->l()
                     << ", a=" << tasks[i].a << ", b=" << tasks[i].b << ", c=" << tasks[i].c
                     << "): " << slots[i].error << '\n';
            continue;
        }
        CensusRow row = std::move(*slots[i].row);
        if (row.group_order <= config.oracle_cutoff) {
            const GroupTable table = GroupTable::closure(make_generators(make_spec(tasks[i])));
            for (const Representative& rep : reps) {
                const CensusRow& other = rows[rep.row_index];
                if (other.q != row.q || other.s != row.s || other.t != row.t ||
                    other.genus != row.genus || other.group_order != row.group_order ||
                    other.chirality != row.chirality)
                    continue;
                const GroupTable rep_table =
                    GroupTable::closure(make_generators(make_spec(tasks[rep.task_index])));
                if (tables_isomorphic(table, rep_table)) {
                    row.iso_class = rep.cls;
                    break;
                }
            }
            if (!row.iso_class.has_value()) {
                row.iso_class = next_class;
                reps.push_back({i, rows.size(), next_class});
                ++next_class;
            }
        } else if (log != nullptr) {
            *log << "iso-class label skipped for q=" << row.q << " a=" << row.a
                 << ": group order exceeds the oracle cutoff\n";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool isomorphism_test(const PolyhedronSpec& lhs, const PolyhedronSpec& rhs,
                      std::uint64_t cutoff) {
    const GroupTable lt = GroupTable::closure(make_generators(lhs));
    const GroupTable rt = GroupTable::closure(make_generators(rhs));
    require(lt.size() <= cutoff && rt.size() <= cutoff, errc::cutoff_exceeded,
            "group order exceeds the isomorphism-test cutoff");
    return tables_isomorphic(lt, rt);
}

namespace {

nlohmann::ordered_json evidence_json(const CensusRow& row) {
    nlohmann::ordered_json ev;
    ev["method"] = to_string(row.method);
    if (row.semi_affine_witness.has_value()) {
        ev["witness"] = {{"kind", "semi_affine"},
                         {"g", row.semi_affine_witness->g},
                         {"h", row.semi_affine_witness->h},
                         {"j", row.semi_affine_witness->j}};
    } else if (row.generator_image_witness.has_value()) {
        const auto& w = *row.generator_image_witness;
        ev["witness"] = {{"kind", "generator_images"},
                         {"sigma2_image", {w.s2_a, w.s2_b}},
                         {"tau_image", {w.tau_a, w.tau_b}}};
    } else {
        ev["witness"] = nullptr;
    }
    return ev;
}

std::string evidence_compact(const CensusRow& row) {
    std::ostringstream out;
    out << to_string(row.method);
    if (row.semi_affine_witness.has_value()) {
        const auto& w = *row.semi_affine_witness;
        out << ":g=" << w.g << ";h=" << w.h << ";j=" << w.j;
    } else if (row.generator_image_witness.has_value()) {
        const auto& w = *row.generator_image_witness;
        out << ":s2_image=(" << w.s2_a << ";" << w.s2_b << ");tau_image=(" << w.tau_a << ";"
            << w.tau_b << ")";
    }
    return out.str();
}

}  // namespace

std::string to_json_line(const CensusRow& row) {
    nlohmann::ordered_json j;
    j["schema"] = kSchemaVersion;
    j["p"] = row.p;
    j["l"] = row.l;
    j["q"] = row.q;
    j["modulus"] = row.modulus;
    j["a"] = row.a;
    j["b"] = row.b;
    j["c"] = row.c;
    j["m"] = row.m;
    j["s"] = row.s;
    j["t"] = row.t;
    j["f0"] = row.f0;
    j["f1"] = row.f1;
    j["f2"] = row.f2;
    j["chi"] = row.chi;
    j["genus"] = row.genus;
    j["group_order"] = row.group_order;
    j["decomposition"] = to_string(row.decomposition);
    j["is_full_agl"] = row.is_full_agl;
    j["chirality"] = to_string(row.chirality);
    j["evidence"] = evidence_json(row);
    if (row.iso_class.has_value()) j["iso_class"] = *row.iso_class;
    return j.dump();
}

std::string csv_header() {
    return "schema,p,l,q,modulus,a,b,c,m,s,t,f0,f1,f2,chi,genus,group_order,"
           "decomposition,is_full_agl,chirality,evidence,iso_class";
}

std::string to_csv_line(const CensusRow& row) {
    std::ostringstream out;
    out << kSchemaVersion << ',' << row.p << ',' << row.l << ',' << row.q << ',';
    for (std::size_t i = 0; i < row.modulus.size(); ++i)
        out << (i ? ";" : "") << row.modulus[i];
    out << ',' << row.a << ',' << row.b << ',' << row.c << ',' << row.m << ',' << row.s << ','
        << row.t << ',' << row.f0 << ',' << row.f1 << ',' << row.f2 << ',' << row.chi << ','
        << row.genus << ',' << row.group_order << ',' << to_string(row.decomposition) << ','
        << (row.is_full_agl ? "true" : "false") << ',' << to_string(row.chirality) << ','
        << evidence_compact(row) << ',';
    if (row.iso_class.has_value()) out << *row.iso_class;
    return out.str();
}

void write_rows(std::ostream& out, const std::vector<CensusRow>& rows, OutputFormat format) {
    switch (format) {
        case OutputFormat::json_lines:
            for (const CensusRow& row : rows) out << to_json_line(row) << '\n';
            return;
        case OutputFormat::csv:
            out << csv_header() << '\n';
            for (const CensusRow& row : rows) out << to_csv_line(row) << '\n';
            return;
        case OutputFormat::table: {
            out << std::left << std::setw(6) << "q" << std::setw(5) << "a" << std::setw(5)
                << "b" << std::setw(5) << "c" << std::setw(11) << "type" << std::setw(7)
                << "genus" << std::setw(7) << "order" << std::setw(14) << "decomposition"
                << std::setw(10) << "full_agl" << std::setw(14) << "chirality" << "evidence"
                << '\n';
            for (const CensusRow& row : rows) {
                std::ostringstream type;
                type << '{' << row.s << ',' << row.t << '}';
                out << std::left << std::setw(6) << row.q << std::setw(5) << row.a
                    << std::setw(5) << row.b << std::setw(5) << row.c << std::setw(11)
                    << type.str() << std::setw(7) << row.genus << std::setw(7)
                    << row.group_order << std::setw(14) << to_string(row.decomposition)
                    << std::setw(10) << (row.is_full_agl ? "yes" : "no") << std::setw(14)
                    << to_string(row.chirality) << evidence_compact(row) << '\n';
            }
            return;
        }
    }
}

std::vector<SurveyRow> run_survey(const Field& field, const ClassifyOptions& opts) {
    std::vector<SurveyRow> rows;
    for (const std::uint64_t n : divisors(field.q() - 1)) {
        if (n <= 2) continue;
        SurveyRow row;
        row.q = field.q();
        row.n = n;
        row.m = (field.q() - 1) / n;
        row.predicted = survey_type(field.pp(), n);

        const PolyhedronSpec spec{field.gamma().pow(row.m), field.zero(), field.one()};
        const PolyhedronReport report = run_single(spec, opts);
        row.constructed = SchlafliType{report.s, report.t};
        row.match = row.predicted == row.constructed;
        row.chirality =
            report.chirality.has_value() ? report.chirality->status : Chirality::undetermined;
        rows.push_back(row);
    }
    return rows;
}

void write_survey(std::ostream& out, const std::vector<SurveyRow>& rows,
                  OutputFormat format) {
    switch (format) {
        case OutputFormat::json_lines:
            for (const SurveyRow& row : rows) {
                nlohmann::ordered_json j;
                j["schema"] = kSchemaVersion;
                j["q"] = row.q;
                j["n"] = row.n;
                j["m"] = row.m;
                j["predicted"] = {row.predicted.s, row.predicted.t};
                j["constructed"] = {row.constructed.s, row.constructed.t};
                j["match"] = row.match;
                j["chirality"] = to_string(row.chirality);
                out << j.dump() << '\n';
            }
            return;
        case OutputFormat::csv:
            out << "schema,q,n,m,predicted_s,predicted_t,constructed_s,constructed_t,match,"
                   "chirality\n";
            for (const SurveyRow& row : rows)
                out << kSchemaVersion << ',' << row.q << ',' << row.n << ',' << row.m << ','
                    << row.predicted.s << ',' << row.predicted.t << ',' << row.constructed.s
                    << ',' << row.constructed.t << ',' << (row.match ? "true" : "false") << ','
                    << to_string(row.chirality) << '\n';
            return;
        case OutputFormat::table:
            out << std::left << std::setw(6) << "q" << std::setw(5) << "n" << std::setw(5)
                << "m" << std::setw(12) << "predicted" << std::setw(13) << "constructed"
                << std::setw(7) << "match" << "chirality" << '\n';
            for (const SurveyRow& row : rows) {
                std::ostringstream pred, cons;
                pred << '{' << row.predicted.s << ',' << row.predicted.t << '}';
                cons << '{' << row.constructed.s << ',' << row.constructed.t << '}';
                out << std::left << std::setw(6) << row.q << std::setw(5) << row.n
                    << std::setw(5) << row.m << std::setw(12) << pred.str() << std::setw(13)
                    << cons.str() << std::setw(7) << (row.match ? "yes" : "no")
                    << to_string(row.chirality) << '\n';
            }
            return;
    }
}

}  // namespace aglpoly
