#include "f2norm/formats.hpp"

#include "f2norm/errors.hpp"
#include "f2norm/fourier.hpp"
#include "f2norm/set_functions.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#ifndef F2NORM_COMMIT
#define F2NORM_COMMIT "unknown"
#endif

namespace f2norm {

std::string_view tool_commit() {
    return F2NORM_COMMIT;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

PointSet parse_set_file(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty() || !lines[0].starts_with("n=")) throw InputError("set file must start with 'n=<int>'");

    auto nstr = lines[0].substr(2);
    int n = 0;
    auto [ptr, ec] = std::from_chars(nstr.data(), nstr.data() + nstr.size(), n);
    if (ec != std::errc{} || ptr != nstr.data() + nstr.size()) throw InputError("malformed 'n=' line");
    GroupDim dim(n);

    if (lines.size() == 2 && lines[1].starts_with("hexbits=")) return PointSet::from_hex(dim, std::string(lines[1].substr(8)));

    PointSet a(dim);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto tok = lines[i];
        if (tok.starts_with("0x") || tok.starts_with("0X")) tok.remove_prefix(2);
        std::uint64_t x = 0;
        auto [p, e] = std::from_chars(tok.data(), tok.data() + tok.size(), x, 16);
        if (tok.empty() || e != std::errc{} || p != tok.data() + tok.size())
            throw InputError("malformed point '" + std::string(lines[i]) + "'");
        if (x >= dim.order()) throw InputError("point " + std::string(lines[i]) + " lies outside F_2^" + std::to_string(n));
        if (a.contains(static_cast<PointMask>(x))) throw InputError("duplicate point " + std::string(lines[i]));
        a.insert(static_cast<PointMask>(x));
    }
    return a;
}

PointSet read_set_file(const std::string& path) {
    return parse_set_file(read_all(path));
}

std::string format_set_file(const PointSet& a) {
    std::string out = "n=" + std::to_string(a.dim().n()) + "\n";
    char buf[16];
    for (PointMask x : a.members()) {
        std::snprintf(buf, sizeof buf, "%x\n", x);
        out += buf;
    }
    return out;
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

Json dyadic_to_json(const DyadicScalar& x) {
    if (!wide::fits_int64(x.numerator())) throw ArithmeticOverflow("numerator does not fit a 64-bit JSON integer");
    Json j;
    j["num"] = static_cast<std::int64_t>(x.numerator());
    j["exp"] = x.exponent();
    return j;
}

DyadicScalar dyadic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("exp") || !j["num"].is_number_integer() ||
        !j["exp"].is_number_integer())
        throw InputError("expected {num, exp} integer pair");
    auto num = j["num"].get<std::int64_t>();
    auto exp = j["exp"].get<int>();
    if (exp < 0) throw InputError("negative exponent in {num, exp}");
    auto x = DyadicScalar::from_parts(num, exp);
    if (x.numerator() != num || x.exponent() != exp) throw InputError("{num, exp} pair is not in canonical form");
    return x;
}

Json witness_to_json(const DyadicDensity& density, const CosetUnion& u) {
    Json j;
    j["exponents"] = density.exponents();
    j["alpha"] = dyadic_to_json(density.value());
    Json lambdas = Json::array();
    for (const auto& l : u.witness.lambdas) lambdas.push_back(l.basis());
    j["lambdas"] = lambdas;
    j["gammas"] = u.witness.gammas;
    j["offsets"] = u.witness.offsets;
    Json parts = Json::array();
    for (const auto& p : u.witness.parts) parts.push_back(p.to_hex());
    j["parts_hex"] = parts;
    return j;
}

Json hypothesis_to_json(const HypothesisReport& report) {
    Json j;
    j["alpha"] = dyadic_to_json(report.alpha);
    j["max_order"] = report.max_order;
    Json rows = Json::array();
    for (const auto& r : report.per_dim) {
        Json row;
        row["d"] = r.d;
        row["product"] = dyadic_to_json(r.product);
        row["scaled_product"] = dyadic_to_json(r.scaled_product);
        rows.push_back(row);
    }
    j["per_dim"] = rows;
    j["c_plain"] = dyadic_to_json(report.c_plain);
    j["c_scaled"] = dyadic_to_json(report.c_scaled);
    return j;
}

HypothesisReport hypothesis_from_json(const Json& j) {
    HypothesisReport r;
    r.alpha = dyadic_from_json(j.at("alpha"));
    r.max_order = j.at("max_order").get<std::uint64_t>();
    for (const auto& row : j.at("per_dim"))
        r.per_dim.push_back({row.at("d").get<int>(), dyadic_from_json(row.at("product")),
                             dyadic_from_json(row.at("scaled_product"))});
    r.c_plain = dyadic_from_json(j.at("c_plain"));
    r.c_scaled = dyadic_from_json(j.at("c_scaled"));
    return r;
}

Certificate make_certificate(const PointSet& a, const IterationTrace& trace, std::optional<DyadicScalar> norm,
                             std::optional<HypothesisReport> hypothesis) {
    Certificate c;
    c.n = a.dim().n();
    c.alpha = a.density();
    c.a_norm = norm;
    for (const auto& st : trace.steps)
        c.trace.push_back({st.s, st.dim_before, st.dim_after, st.gain, st.chang_ceiling, st.chang_ceiling_as_stated});
    c.final_bound = trace.final_bound;
    c.termination = trace.termination;
    c.hypothesis = std::move(hypothesis);
    c.tool_commit = std::string(tool_commit());
    return c;
}

namespace {

// nlohmann writes the shortest round-trip form of a double; certificates pin
// 17 significant digits instead, so floats travel as tagged strings and are
// unquoted after dumping.
constexpr std::string_view kFloatTag = "@float17:";

std::string tagged_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(kFloatTag) + buf;
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
    Json j;
    j["version"] = cert.version;
    j["n"] = cert.n;
    j["alpha"] = dyadic_to_json(cert.alpha);
    j["a_norm"] = cert.a_norm ? dyadic_to_json(*cert.a_norm) : Json(nullptr);
    Json trace = Json::array();
    for (const auto& st : cert.trace) {
        Json row;
        row["s"] = st.s;
        row["dim_before"] = st.dim_before;
        row["dim_after"] = st.dim_after;
        row["gain"] = dyadic_to_json(st.gain);
        row["chang_ceiling"] = tagged_float(st.chang_ceiling);
        row["chang_ceiling_as_stated"] = tagged_float(st.chang_ceiling_as_stated);
        trace.push_back(row);
    }
    j["trace"] = trace;
    j["final_bound"] = dyadic_to_json(cert.final_bound);
    j["termination"] = std::string(to_string(cert.termination));
    j["hypothesis"] = cert.hypothesis ? hypothesis_to_json(*cert.hypothesis) : Json(nullptr);
    j["tool_commit"] = cert.tool_commit;

    static const std::regex tagged("\"" + std::string(kFloatTag) + "([^\"]*)\"");
    return std::regex_replace(j.dump(2), tagged, "$1") + "\n";
}

Certificate parse_certificate(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.version = j.at("version").get<int>();
        if (c.version != kCertificateVersion) throw InputError("unsupported certificate version");
        c.n = j.at("n").get<int>();
        c.alpha = dyadic_from_json(j.at("alpha"));
        if (!j.at("a_norm").is_null()) c.a_norm = dyadic_from_json(j.at("a_norm"));
        for (const auto& row : j.at("trace")) {
            CertificateStep st;
            st.s = row.at("s").get<int>();
            st.dim_before = row.at("dim_before").get<int>();
            st.dim_after = row.at("dim_after").get<int>();
            st.gain = dyadic_from_json(row.at("gain"));
            st.chang_ceiling = row.at("chang_ceiling").get<double>();
            if (row.contains("chang_ceiling_as_stated"))
                st.chang_ceiling_as_stated = row.at("chang_ceiling_as_stated").get<double>();
            c.trace.push_back(st);
        }
        c.final_bound = dyadic_from_json(j.at("final_bound"));
        c.termination = parse_termination(j.at("termination").get<std::string>());
        if (!j.at("hypothesis").is_null()) c.hypothesis = hypothesis_from_json(j.at("hypothesis"));
        c.tool_commit = j.at("tool_commit").get<std::string>();
        return c;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
}

std::vector<std::string> check_certificate(const Certificate& cert, const PointSet& a) {
    std::vector<std::string> failures;
    if (cert.n != a.dim().n()) {
        failures.push_back("certificate is for n=" + std::to_string(cert.n) + ", set has n=" + std::to_string(a.dim().n()));
        return failures;
    }
    if (cert.alpha != a.density())
        failures.push_back("alpha " + cert.alpha.to_string() + " differs from the set density " + a.density().to_string());

    DyadicScalar total = cert.alpha;
    int expected_dim = 0;
    for (std::size_t i = 0; i < cert.trace.size(); ++i) {
        const auto& st = cert.trace[i];
        const std::string tag = "step " + std::to_string(i) + ": ";
        if (st.s < 0 || !meets_level_threshold(st.gain, st.s))
            failures.push_back(tag + "gain " + st.gain.to_string() + " below (1/6)(4/3)^" + std::to_string(st.s));
        if (st.dim_before != expected_dim) failures.push_back(tag + "dim_before breaks the dimension chain");
        if (st.dim_after <= st.dim_before) failures.push_back(tag + "dimension did not grow");
        if (st.dim_after > cert.n) failures.push_back(tag + "dimension exceeds n");
        if (static_cast<double>(st.dim_after - st.dim_before) > st.chang_ceiling)
            failures.push_back(tag + "dimension growth exceeds the Chang ceiling");
        expected_dim = st.dim_after;
        total += st.gain;
    }
    if (total != cert.final_bound)
        failures.push_back("final_bound " + cert.final_bound.to_string() + " is not alpha plus the step gains (" +
                           total.to_string() + ")");

    const DyadicScalar norm = a_norm(fwht(indicator(a)));
    if (cert.a_norm && *cert.a_norm != norm)
        failures.push_back("a_norm " + cert.a_norm->to_string() + " differs from the recomputed " + norm.to_string());
    if (cert.final_bound > norm)
        failures.push_back("final_bound " + cert.final_bound.to_string() + " exceeds a_norm " + norm.to_string());
    if (cert.termination == Termination::residual_zero && cert.final_bound != norm)
        failures.push_back("ResidualZero termination but final_bound differs from a_norm");

    if (cert.hypothesis) {
        auto expected = hypothesis_check(a.density(), cert.hypothesis->max_order);
        if (hypothesis_to_json(expected) != hypothesis_to_json(*cert.hypothesis))
            failures.push_back("hypothesis report does not match a recomputation");
    }
    return failures;
}

std::string search_csv_row(const SearchRecord& r) {
    std::ostringstream ss;
    ss << r.n << ',' << r.set_size << ',' << to_string(r.method) << ',' << r.seed << ','
       << wide::to_string(r.best_norm.numerator()) << ',' << r.best_norm.exponent() << ',' << r.best_set.to_hex() << ','
       << r.evaluations;
    return ss.str();
}

void append_search_record(const std::string& path, const SearchRecord& r) {
    bool need_header;
    {
        std::ifstream probe(path, std::ios::binary | std::ios::ate);
        need_header = !probe || probe.tellg() == 0;
    }
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw InputError("cannot append to '" + path + "'");
    if (need_header) out << kSearchCsvHeader << '\n';
    out << search_csv_row(r) << '\n';
}

}  // namespace f2norm
