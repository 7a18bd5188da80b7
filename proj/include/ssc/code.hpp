#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ssc/qcombinatorics.hpp"
#include "ssc/subspace.hpp"

namespace ssc {

/// A subspace code: an ordered, deduplicated set of subspaces of GF(q)^n,
/// with metadata describing how it was built and what it claims.
struct Code {
    FieldPtr field;
    uint32_t n = 0;
    std::vector<Subspace> codewords;

    struct Metadata {
        std::string construction;                 // e.g. "kk", "layered"
        std::string parameters;                   // rendered "q=2 n=6 r=3 d=2"
        std::optional<Metric> metric;
        std::optional<uint32_t> min_distance;     // claimed, per metric
        std::optional<uint32_t> covering_radius;  // claimed, per metric
        bool verified = false;                    // oracle-confirmed claim
    } meta;

    size_t size() const { return codewords.size(); }
    /// Appends unless the canonical form is already present.
    void add(Subspace s);
    bool contains(const Subspace& s) const;
};

/// Code-file format: first non-comment line is "q n"; each following line is
/// one codeword, its basis rows separated by ';' and row entries by ','.
/// Entries are base-p digit strings (low-to-high), the element serialization
/// of the field module. The zero subspace is the single token "-". Blank
/// lines and lines starting with '#' are ignored; metadata travels in
/// "# key: value" comments.
void write_code_file(const Code& code, std::ostream& out);
Code read_code_file(std::istream& in);

void write_code_file(const Code& code, const std::string& path);
Code read_code_file(const std::string& path);

std::string codeword_to_string(const Subspace& s);
Subspace codeword_from_string(const FieldPtr& field, uint32_t n, const std::string& line);

} // namespace ssc
