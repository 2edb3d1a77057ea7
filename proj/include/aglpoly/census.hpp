// Census machinery: the full single-spec pipeline, parameter scans with
// isomorphism-class labels, and row serialization (JSON lines, CSV, or an
// aligned text table).
//
// Wire format.  Field elements serialize as their integer encoding
// c_0 + c_1 p + ... + c_{l-1} p^{l-1}; fields as (p, l, modulus coefficient
// list, constant term first).  Census rows are flat records
//   {schema, p, l, q, modulus, a, b, c, m, s, t, f0, f1, f2, chi, genus,
//    group_order, decomposition, is_full_agl, chirality, evidence
//    [, iso_class]}
// emitted one JSON object per line or one CSV row per spec, in canonical
// order (q, then enc(a), enc(b), enc(c)), so identical scans produce
// byte-identical output.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aglpoly/chirality.hpp"

namespace aglpoly {

inline constexpr int kSchemaVersion = 1;

// A self-contained (field-lifetime-free) flat record of one polyhedron.
struct CensusRow {
    std::uint64_t p = 0, l = 0, q = 0;
    std::vector<std::uint64_t> modulus;
    std::uint64_t a = 0, b = 0, c = 0;
    std::uint64_t m = 0;
    std::uint64_t s = 0, t = 0;
    std::uint64_t f0 = 0, f1 = 0, f2 = 0;
    std::int64_t chi = 0;
    std::uint64_t genus = 0;
    std::uint64_t group_order = 0;
    Decomposition decomposition = Decomposition::translation_semidirect;
    bool is_full_agl = false;
    Chirality chirality = Chirality::undetermined;
    VerdictMethod method = VerdictMethod::none;

    struct SemiAffineWitnessData {
        std::uint64_t g, h, j;
    };
    struct GeneratorImageData {
        std::uint64_t s2_a, s2_b, tau_a, tau_b;
    };
    std::optional<SemiAffineWitnessData> semi_affine_witness;
    std::optional<GeneratorImageData> generator_image_witness;

    std::optional<std::uint64_t> iso_class;  // label within a scan
};

CensusRow flatten(const PolyhedronReport& report);

enum class OutputFormat { json_lines, csv, table };

// Full pipeline for one spec: generators -> closure -> structure -> poset
// checks -> type/genus -> chirality.  Poset violations raise
// inconsistent_table.
PolyhedronReport run_single(const PolyhedronSpec& spec, const ClassifyOptions& opts = {});

struct ScanConfig {
    std::optional<std::uint64_t> p;      // restrict to this characteristic
    std::optional<std::uint64_t> l;      // restrict to this extension degree
    std::optional<std::uint64_t> max_q;  // scan all odd prime powers 5 <= q <= max_q
    enum class ParamSet { canonical, all } params = ParamSet::canonical;
    std::uint64_t oracle_cutoff = kDefaultOracleCutoff;
    bool deterministic = false;  // force single-threaded evaluation
    std::size_t threads = 0;     // 0 = hardware concurrency
};

// Runs the pipeline over the configured parameter space.  Rows come back in
// canonical order with isomorphism-class labels; per-row failures are
// reported on `log` (when given) and skipped.
std::vector<CensusRow> run_scan(const ScanConfig& config, std::ostream* log = nullptr);

// True iff some group isomorphism maps the distinguished generator pair of
// the first polyhedron onto that of the second.
bool isomorphism_test(const PolyhedronSpec& lhs, const PolyhedronSpec& rhs,
                      std::uint64_t cutoff = kDefaultOracleCutoff);

std::string to_json_line(const CensusRow& row);
std::string csv_header();
std::string to_csv_line(const CensusRow& row);
void write_rows(std::ostream& out, const std::vector<CensusRow>& rows, OutputFormat format);

// Survey rows: predicted vs constructed type for each divisor n > 2 of q-1.
struct SurveyRow {
    std::uint64_t q = 0, n = 0, m = 0;
    SchlafliType predicted{0, 0};
    SchlafliType constructed{0, 0};
    bool match = false;
    Chirality chirality = Chirality::undetermined;
};

std::vector<SurveyRow> run_survey(const Field& field, const ClassifyOptions& opts = {});
void write_survey(std::ostream& out, const std::vector<SurveyRow>& rows, OutputFormat format);

}  // namespace aglpoly
