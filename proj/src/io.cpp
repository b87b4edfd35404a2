#include "entrogeo/io.hpp"

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace entrogeo::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::bad_argument, "malformed JSON");
    return j;
}

double as_number(const json& j, const char* where) {
    if (!j.is_number()) fail(errc::bad_argument, std::string(where) + " must be a number");
    return j.get<double>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(errc::bad_argument, std::string("missing field \"") + key + "\"");
    return j[key];
}

std::vector<double> as_number_list(const json& j, const char* where) {
    if (!j.is_array()) fail(errc::bad_argument, std::string(where) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& x : j) out.push_back(as_number(x, where));
    return out;
}

std::vector<std::vector<double>> as_number_plane(const json& j, const char* where) {
    if (!j.is_array()) fail(errc::bad_argument, std::string(where) + " must be an array of rows");
    std::vector<std::vector<double>> out;
    out.reserve(j.size());
    for (const json& row : j) out.push_back(as_number_list(row, where));
    return out;
}

std::string kind_of(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(errc::bad_argument, "expected an object with a \"kind\" string");
    return j["kind"].get<std::string>();
}

void append_list(std::string& out, const std::vector<double>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += format_double(xs[i]);
    }
    out += ']';
}

void append_plane_row_major(std::string& out, const std::vector<double>& flat, std::size_t d) {
    out += '[';
    for (std::size_t i = 0; i < d; ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < d; ++j) {
            if (j) out += ',';
            out += format_double(flat[i * d + j]);
        }
        out += ']';
    }
    out += ']';
}

std::string element_json(const Element& e) {
    std::string out;
    if (const auto* seq = std::get_if<RealSequence>(&e)) {
        out += "{\"kind\":\"sequence\",\"entries\":";
        append_list(out, seq->entries());
        out += '}';
    } else {
        const auto& m = std::get<HermitianMatrix>(e);
        out += "{\"kind\":\"hermitian\",\"re\":";
        append_plane_row_major(out, m.re_plane(), m.dim());
        out += ",\"im\":";
        append_plane_row_major(out, m.im_plane(), m.dim());
        out += '}';
    }
    return out;
}

Element element_from_json(const json& j) {
    const std::string kind = kind_of(j);
    if (kind == "sequence") {
        if (!j.contains("entries")) fail(errc::bad_argument, "sequence needs \"entries\"");
        return RealSequence(as_number_list(j["entries"], "entries"));
    }
    if (kind == "hermitian") {
        if (!j.contains("re")) fail(errc::bad_argument, "hermitian element needs \"re\"");
        const auto re = as_number_plane(j["re"], "re");
        std::vector<std::vector<double>> im;
        if (j.contains("im"))
            im = as_number_plane(j["im"], "im");
        else
            im.assign(re.size(), std::vector<double>(re.size(), 0.0));
        return HermitianMatrix(re, im);
    }
    fail(errc::kind_mismatch, "unknown element kind \"" + kind + "\"");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_failure, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) fail(errc::io_failure, "cannot read " + path);
    return std::move(buf).str();
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

State parse_state(const std::string& json_text, double tol) {
    const json j = parse_json(json_text);
    const std::string kind = kind_of(j);
    if (kind == "distribution") {
        if (!j.contains("weights")) fail(errc::bad_argument, "distribution needs \"weights\"");
        return make_distribution(as_number_list(j["weights"], "weights"), tol);
    }
    if (kind == "density") {
        if (!j.contains("re")) fail(errc::bad_argument, "density needs \"re\"");
        const auto re = as_number_plane(j["re"], "re");
        std::vector<std::vector<double>> im;
        if (j.contains("im"))
            im = as_number_plane(j["im"], "im");
        else
            im.assign(re.size(), std::vector<double>(re.size(), 0.0));
        return make_density(re, im, tol);
    }
    fail(errc::kind_mismatch, "unknown state kind \"" + kind + "\"");
}

State load_state(const std::string& path, double tol) { return parse_state(read_file(path), tol); }

std::string to_json(const State& s) {
    std::string out;
    if (const auto* w = std::get_if<DiscreteDistribution>(&s)) {
        out += "{\"kind\":\"distribution\",\"weights\":";
        append_list(out, w->weights().entries());
        out += '}';
    } else {
        const auto& m = std::get<DensityOperator>(s).matrix();
        out += "{\"kind\":\"density\",\"re\":";
        append_plane_row_major(out, m.re_plane(), m.dim());
        out += ",\"im\":";
        append_plane_row_major(out, m.im_plane(), m.dim());
        out += '}';
    }
    return out;
}

Transform parse_transform(const std::string& json_text) {
    const json j = parse_json(json_text);
    const std::string kind = kind_of(j);
    if (kind == "matrix") {
        if (!j.contains("rows")) fail(errc::bad_argument, "matrix transform needs \"rows\"");
        return SequenceMap(as_number_plane(j["rows"], "rows"));
    }
    if (kind == "partition") {
        if (!j.contains("blocks") || !j["blocks"].is_array())
            fail(errc::bad_argument, "partition needs \"blocks\" as an array of arrays");
        std::vector<std::vector<std::size_t>> blocks;
        for (const json& block : j["blocks"]) {
            if (!block.is_array()) fail(errc::bad_argument, "partition blocks must be arrays");
            std::vector<std::size_t> indices;
            for (const json& x : block) {
                if (!x.is_number_integer() || x.get<long long>() < 0)
                    fail(errc::bad_argument, "partition indices must be nonnegative integers");
                indices.push_back(x.get<std::size_t>());
            }
            blocks.push_back(std::move(indices));
        }
        return Partition(std::move(blocks));
    }
    if (kind == "blockstructure") {
        if (!j.contains("sizes") || !j["sizes"].is_array())
            fail(errc::bad_argument, "block structure needs \"sizes\" as an array");
        std::vector<std::size_t> sizes;
        for (const json& x : j["sizes"]) {
            if (!x.is_number_integer() || x.get<long long>() <= 0)
                fail(errc::bad_argument, "block sizes must be positive integers");
            sizes.push_back(x.get<std::size_t>());
        }
        return BlockStructure(std::move(sizes));
    }
    fail(errc::kind_mismatch, "unknown transform kind \"" + kind + "\"");
}

Transform load_transform(const std::string& path) { return parse_transform(read_file(path)); }

std::string profile_csv(const EntropyProfile& p) {
    std::string out = "r1,rinf\n";
    for (const Breakpoint& bp : p.breakpoints()) {
        out += format_double(bp.r1);
        out += ',';
        out += format_double(bp.rinf);
        out += '\n';
    }
    return out;
}

EntropyProfile profile_from_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) || (line != "r1,rinf" && line != "r1,rinf\r"))
        fail(errc::bad_argument, "profile CSV must start with the header r1,rinf");
    std::vector<Breakpoint> bps;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) fail(errc::bad_argument, "profile CSV row without comma");
        try {
            bps.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
        } catch (const std::exception&) {
            fail(errc::bad_argument, "profile CSV row is not numeric");
        }
    }
    if (bps.size() < 2) fail(errc::bad_argument, "profile CSV needs at least two breakpoints");
    std::vector<int> muls;
    muls.reserve(bps.size() - 1);
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
        const double dr1 = bps[k + 1].r1 - bps[k].r1;
        const double drinf = bps[k].rinf - bps[k + 1].rinf;
        if (!(drinf > 0.0)) fail(errc::bad_argument, "profile CSV rinf must strictly decrease");
        const double ratio = dr1 / drinf;
        const double rounded = std::round(ratio);
        if (!(std::abs(ratio - rounded) <= 1e-6 * std::max(1.0, rounded)) || rounded < 1.0)
            fail(errc::bad_argument, "profile CSV segment slope is not a positive integer");
        muls.push_back(static_cast<int>(rounded));
    }
    return EntropyProfile(std::move(bps), std::move(muls));
}

std::string to_json(const EntropyRecord& r) {
    std::string out = "{\"direct\":";
    out += format_double(r.direct);
    out += ",\"boundary\":";
    out += format_double(r.boundary);
    out += ",\"quadrature\":";
    out += format_double(r.quadrature);
    out += ",\"max_discrepancy\":";
    out += format_double(r.max_discrepancy);
    out += '}';
    return out;
}

EntropyRecord entropy_record_from_json(const std::string& json_text) {
    const json j = parse_json(json_text);
    EntropyRecord r;
    r.direct = as_number(field(j, "direct"), "direct");
    r.boundary = as_number(field(j, "boundary"), "boundary");
    r.quadrature = as_number(field(j, "quadrature"), "quadrature");
    r.max_discrepancy = as_number(field(j, "max_discrepancy"), "max_discrepancy");
    return r;
}

std::string to_json(const SeparationVerdict& v) {
    std::string out = "{\"intersects\":";
    out += v.intersects ? "true" : "false";
    out += ",\"best_found_norm1\":";
    out += v.best_found_norm1 ? format_double(*v.best_found_norm1) : "null";
    out += ",\"witness\":";
    if (v.witness) {
        out += "{\"u\":";
        out += element_json(v.witness->u);
        out += ",\"v\":";
        out += element_json(v.witness->v);
        out += '}';
    } else {
        out += "null";
    }
    out += '}';
    return out;
}

SeparationVerdict verdict_from_json(const std::string& json_text) {
    const json j = parse_json(json_text);
    SeparationVerdict v;
    if (!j.is_object() || !j.contains("intersects") || !j["intersects"].is_boolean())
        fail(errc::bad_argument, "verdict needs a boolean \"intersects\"");
    v.intersects = j["intersects"].get<bool>();
    if (j.contains("best_found_norm1") && !j["best_found_norm1"].is_null())
        v.best_found_norm1 = as_number(j["best_found_norm1"], "best_found_norm1");
    if (j.contains("witness") && !j["witness"].is_null()) {
        const json& w = j["witness"];
        if (!w.is_object() || !w.contains("u") || !w.contains("v"))
            fail(errc::bad_argument, "witness needs \"u\" and \"v\"");
        v.witness = Decomposition{element_from_json(w["u"]), element_from_json(w["v"])};
    }
    return v;
}

std::string to_json(const std::vector<MonotonicityReport>& reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += ',';
        out += "{\"entropy_before\":";
        out += format_double(reports[i].entropy_before);
        out += ",\"entropy_after\":";
        out += format_double(reports[i].entropy_after);
        out += ",\"region_shrank\":";
        out += reports[i].region_shrank ? "true" : "false";
        out += ",\"verdict\":";
        out += reports[i].verdict ? "true" : "false";
        out += '}';
    }
    out += ']';
    return out;
}

std::vector<MonotonicityReport> reports_from_json(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_array()) fail(errc::bad_argument, "monotonicity reports must be an array");
    std::vector<MonotonicityReport> out;
    out.reserve(j.size());
    for (const json& item : j) {
        MonotonicityReport r;
        r.entropy_before = as_number(field(item, "entropy_before"), "entropy_before");
        r.entropy_after = as_number(field(item, "entropy_after"), "entropy_after");
        if (!item.contains("region_shrank") || !item["region_shrank"].is_boolean() ||
            !item.contains("verdict") || !item["verdict"].is_boolean())
            fail(errc::bad_argument, "monotonicity report needs boolean fields");
        r.region_shrank = item["region_shrank"].get<bool>();
        r.verdict = item["verdict"].get<bool>();
        out.push_back(r);
    }
    return out;
}

}  // namespace entrogeo::io
