#pragma once

#include "f2norm/constructions.hpp"
#include "f2norm/dyadic.hpp"
#include "f2norm/explorer.hpp"
#include "f2norm/iteration.hpp"
#include "f2norm/point_set.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace f2norm {

using Json = nlohmann::ordered_json;

std::string_view tool_commit();

// ---- SetFile ------------------------------------------------------------
//
//   n=<int>
//   <hex point>          one per line, optional 0x prefix
//   ...
// or
//   n=<int>
//   hexbits=<ceil(2^n/4) hex digits>
//
// Blank lines and lines starting with '#' are ignored.

PointSet parse_set_file(std::string_view text);
PointSet read_set_file(const std::string& path);
/// Point-list form, ascending.
std::string format_set_file(const PointSet& a);
void write_text_file(const std::string& path, std::string_view text);

// ---- JSON pieces ----------------------------------------------------------

Json dyadic_to_json(const DyadicScalar& x);
DyadicScalar dyadic_from_json(const Json& j);

Json witness_to_json(const DyadicDensity& density, const CosetUnion& u);
Json hypothesis_to_json(const HypothesisReport& report);
HypothesisReport hypothesis_from_json(const Json& j);

// ---- Certificate ----------------------------------------------------------

inline constexpr int kCertificateVersion = 1;

struct CertificateStep {
    int s = 0;
    int dim_before = 0;
    int dim_after = 0;
    DyadicScalar gain;
    double chang_ceiling = 0.0;
    double chang_ceiling_as_stated = 0.0;
};

struct Certificate {
    int version = kCertificateVersion;
    int n = 0;
    DyadicScalar alpha;
    std::optional<DyadicScalar> a_norm;
    std::vector<CertificateStep> trace;
    DyadicScalar final_bound;
    Termination termination = Termination::step_cap;
    std::optional<HypothesisReport> hypothesis;
    std::string tool_commit;
};

Certificate make_certificate(const PointSet& a, const IterationTrace& trace, std::optional<DyadicScalar> norm,
                             std::optional<HypothesisReport> hypothesis);

/// Fixed key order; floats written with 17 significant digits; trailing newline.
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

/// Recomputes everything the certificate claims from the set alone. Returns
/// one message per failed check; empty means the certificate is valid.
std::vector<std::string> check_certificate(const Certificate& cert, const PointSet& a);

// ---- Search ledger --------------------------------------------------------

inline constexpr std::string_view kSearchCsvHeader =
    "n,size,method,seed,best_norm_num,best_norm_exp,set_hex,evaluations";

std::string search_csv_row(const SearchRecord& r);
/// Appends one row, writing the header first when the file is new or empty.
void append_search_record(const std::string& path, const SearchRecord& r);

}  // namespace f2norm
