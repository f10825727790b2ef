#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cosareas/bigint.hpp"

namespace cosareas {

/// OEIS b-file: plain text, one "index value" pair per line, with
/// '#'-prefixed comment lines. Indices must be strictly increasing.
struct BFileEntry {
    long long index;
    Integer value;
};

struct OeisBFile {
    std::string id;
    std::vector<BFileEntry> entries;
};

struct BFileMismatch {
    long long index;
    Integer expected;  // value the b-file carries
    Integer got;       // value we computed
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line, const std::string& what)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline OeisBFile parse_bfile(std::string_view text, std::string id = {}) {
    OeisBFile bfile;
    bfile.id = std::move(id);

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;

        const std::size_t sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos)
            throw BFileParseError(line_no, "expected \"index value\"");
        std::string_view idx_tok = line.substr(0, sep);
        std::string_view val_tok = line.substr(sep);
        while (!val_tok.empty() && (val_tok.front() == ' ' || val_tok.front() == '\t'))
            val_tok.remove_prefix(1);
        if (val_tok.empty() || val_tok.find_first_of(" \t") != std::string_view::npos)
            throw BFileParseError(line_no, "expected exactly two fields");

        const auto is_integer_token = [](std::string_view tok) {
            if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) tok.remove_prefix(1);
            if (tok.empty()) return false;
            for (char ch : tok)
                if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
            return true;
        };
        if (!is_integer_token(idx_tok) || !is_integer_token(val_tok))
            throw BFileParseError(line_no, "fields must be integers");

        BFileEntry entry;
        try {
            entry.index = std::stoll(std::string(idx_tok));
        } catch (const std::exception&) {
            throw BFileParseError(line_no, "index out of range");
        }
        entry.value = Integer(std::string(val_tok));

        if (!bfile.entries.empty() && entry.index <= bfile.entries.back().index)
            throw BFileParseError(line_no, "indices must be strictly increasing");
        bfile.entries.push_back(std::move(entry));
    }
    return bfile;
}

/// Compare computed terms (computed[i] is the value at index i) against a
/// b-file. Entries outside the computed range are skipped.
inline std::vector<BFileMismatch> diff_bfile(const OeisBFile& bfile,
                                             const std::vector<Integer>& computed) {
    std::vector<BFileMismatch> mismatches;
    for (const BFileEntry& e : bfile.entries) {
        if (e.index < 0 || static_cast<std::size_t>(e.index) >= computed.size()) continue;
        const Integer& got = computed[static_cast<std::size_t>(e.index)];
        if (got != e.value) mismatches.push_back({e.index, e.value, got});
    }
    return mismatches;
}

}  // namespace cosareas
