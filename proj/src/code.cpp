#include "ssc/code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "ssc/errors.hpp"

namespace ssc {

void Code::add(Subspace s) {
    if (s.field.get() != field.get() || s.n != n)
        throw AmbientMismatch("codeword ambient space mismatch");
    if (!contains(s)) codewords.push_back(std::move(s));
}

bool Code::contains(const Subspace& s) const {
    return std::find(codewords.begin(), codewords.end(), s) != codewords.end();
}

std::string codeword_to_string(const Subspace& s) {
    if (s.r == 0) return "-";
    std::string out;
    for (uint32_t i = 0; i < s.r; ++i) {
        if (i) out += ';';
        for (uint32_t j = 0; j < s.n; ++j) {
            if (j) out += ',';
            out += s.field->to_string(s.at(i, j));
        }
    }
    return out;
}

Subspace codeword_from_string(const FieldPtr& field, uint32_t n,
                              const std::string& line) {
    if (line == "-") return zero_subspace(field, n);
    std::vector<std::vector<uint32_t>> rows;
    std::stringstream rs(line);
    std::string row_text;
    while (std::getline(rs, row_text, ';')) {
        std::vector<uint32_t> row;
        std::stringstream es(row_text);
        std::string entry;
        while (std::getline(es, entry, ',')) {
            // trim surrounding spaces
            size_t a = entry.find_first_not_of(" \t");
            size_t b = entry.find_last_not_of(" \t");
            if (a == std::string::npos) throw ParseError("empty matrix entry");
            row.push_back(field->from_string(entry.substr(a, b - a + 1)));
        }
        if (row.size() != n)
            throw ParseError("row has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty codeword line");
    return canonicalize(field, n, std::move(rows));
}

namespace {

const char* metric_name(Metric m) {
    return m == Metric::subspace ? "subspace" : "injection";
}

} // namespace

void write_code_file(const Code& code, std::ostream& out) {
    if (!code.meta.construction.empty())
        out << "# construction: " << code.meta.construction << "\n";
    if (!code.meta.parameters.empty())
        out << "# parameters: " << code.meta.parameters << "\n";
    if (code.meta.metric) out << "# metric: " << metric_name(*code.meta.metric) << "\n";
    if (code.meta.min_distance)
        out << "# min-distance: " << *code.meta.min_distance << "\n";
    if (code.meta.covering_radius)
        out << "# covering-radius: " << *code.meta.covering_radius << "\n";
    out << "# verified: " << (code.meta.verified ? "yes" : "no") << "\n";
    out << code.field->q() << " " << code.n << "\n";
    for (const auto& cw : code.codewords) out << codeword_to_string(cw) << "\n";
}

Code read_code_file(std::istream& in) {
    Code code;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        // strip trailing carriage return
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto colon = line.find(':');
            if (colon != std::string::npos) {
                std::string key = line.substr(1, colon - 1);
                std::string val = line.substr(colon + 1);
                auto trim = [](std::string& s) {
                    size_t a = s.find_first_not_of(" \t");
                    size_t b = s.find_last_not_of(" \t");
                    s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
                };
                trim(key);
                trim(val);
                if (key == "construction") code.meta.construction = val;
                else if (key == "parameters") code.meta.parameters = val;
                else if (key == "metric")
                    code.meta.metric = val == "injection" ? Metric::injection
                                                          : Metric::subspace;
                else if (key == "min-distance")
                    code.meta.min_distance = (uint32_t)std::stoul(val);
                else if (key == "covering-radius")
                    code.meta.covering_radius = (uint32_t)std::stoul(val);
                else if (key == "verified")
                    code.meta.verified = (val == "yes");
            }
            continue;
        }
        if (!have_header) {
            std::stringstream hs(line);
            uint64_t q = 0;
            uint32_t n = 0;
            if (!(hs >> q >> n) || n == 0)
                throw ParseError("bad code-file header (expected \"q n\")");
            code.field = field_from_order(q);
            code.n = n;
            have_header = true;
            continue;
        }
        code.add(codeword_from_string(code.field, code.n, line));
    }
    if (!have_header) throw ParseError("code file has no header line");
    return code;
}

void write_code_file(const Code& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_code_file(code, out);
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_code_file(in);
}

} // namespace ssc
