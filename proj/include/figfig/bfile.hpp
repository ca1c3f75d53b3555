#pragma once

// OEIS b-file reading, writing and comparison against the generator.
//
// Format: one "index value" pair per line, '#' starts a comment line, blank
// lines are skipped. Indices increase by exactly 1 from the first record.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "figfig/diagnostics.hpp"
#include "figfig/seqcore.hpp"

namespace figfig {

struct BFileRecord {
    std::int64_t index = 0;
    std::int64_t value = 0;

    friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

/// Malformed line or broken index contiguity.
class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

std::vector<BFileRecord> parse_bfile(std::istream& in);

/// Throws std::domain_error when indices are not contiguous.
void write_bfile(const std::vector<BFileRecord>& records, std::ostream& out);

/// Streams the generator over the record range and reports the first
/// divergence. Throws std::domain_error for an empty list or a first index < 1.
CheckReport compare_reference(const std::vector<BFileRecord>& records, SeqId seq);

}  // namespace figfig
