#include "figfig/bfile.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace figfig {

namespace {

constexpr std::string_view kSpace = " \t\r\f\v";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(kSpace);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(kSpace);
    return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, std::int64_t& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && !token.empty();
}

}  // namespace

std::vector<BFileRecord> parse_bfile(std::istream& in) {
    std::vector<BFileRecord> records;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto sep = line.find_first_of(kSpace);
        if (sep == std::string_view::npos) throw BFileError(line_no, "expected 'index value', got '" + raw + "'");
        const std::string_view index_tok = line.substr(0, sep);
        const std::string_view value_tok = trim(line.substr(sep));

        BFileRecord rec;
        if (!parse_int(index_tok, rec.index)) {
            throw BFileError(line_no, "bad index '" + std::string(index_tok) + "'");
        }
        if (!parse_int(value_tok, rec.value)) {
            throw BFileError(line_no, "bad value '" + std::string(value_tok) + "'");
        }
        if (!records.empty() && rec.index != records.back().index + 1) {
            throw BFileError(line_no, "gap at index " + std::to_string(records.back().index + 1) + " (found " +
                                          std::to_string(rec.index) + ")");
        }
        records.push_back(rec);
    }
    return records;
}

void write_bfile(const std::vector<BFileRecord>& records, std::ostream& out) {
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].index != records[i - 1].index + 1) {
            throw std::domain_error("write_bfile: gap at index " + std::to_string(records[i - 1].index + 1));
        }
    }
    for (const BFileRecord& r : records) out << r.index << ' ' << r.value << '\n';
}

CheckReport compare_reference(const std::vector<BFileRecord>& records, SeqId seq) {
    if (records.empty()) throw std::domain_error("compare_reference: no records");
    if (records.front().index < 1) throw std::domain_error("compare_reference: first index must be >= 1");

    const auto lo = static_cast<Term>(records.front().index);
    CheckReport report{"compare-" + std::string(to_string(seq)), lo, lo + records.size() - 1, std::nullopt};

    GenState state;
    while (state.n() + 1 < lo) state.next();
    for (const BFileRecord& r : records) {
        const Term expected = state.next().get(seq);
        if (r.value < 0 || static_cast<Term>(r.value) != expected) {
            report.first_failure = CheckFailure{static_cast<Term>(r.index), "reference has " + std::to_string(r.value) +
                                                                                  ", generator gives " +
                                                                                  std::to_string(expected)};
            break;
        }
    }
    return report;
}

}  // namespace figfig
