#include "ovation/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ovation {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) +
                         (column != 0 ? ", column " + std::to_string(column) : std::string()) +
                         ": " + reason),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t begin = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    tokens.push_back({line.substr(begin, i - begin), begin + 1});
  }
  return tokens;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

std::uint64_t parse_u64(const Token& token, std::size_t line_no, const char* what) {
  if (!token.text.empty() && token.text.front() == '-') {
    throw ParseError(line_no, token.column, std::string("negative ") + what + " '" +
                                                std::string(token.text) + "'");
  }
  if (!all_digits(token.text)) {
    throw ParseError(line_no, token.column, std::string("non-numeric ") + what + " '" +
                                                std::string(token.text) + "'");
  }
  std::uint64_t value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line_no, token.column,
                     std::string(what) + " '" + std::string(token.text) + "' exceeds 64 bits");
  }
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, token.column, std::string("malformed ") + what);
  }
  return value;
}

Instance make_instance(std::size_t case_index, std::vector<Count> counts, std::size_t line_no) {
  try {
    Normalized n = normalize(counts);
    return Instance{case_index, std::move(n.dist), n.trimmed};
  } catch (const AudienceError& e) {
    throw ParseError(line_no, 0, e.what());
  }
}

}  // namespace

std::vector<Instance> parse_codejam(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || tokenize(lines[0]).empty()) {
    throw ParseError(1, 0, "missing case count T");
  }
  const auto header = tokenize(lines[0]);
  if (header.size() != 1) {
    throw ParseError(1, header[1].column, "expected a single case count T");
  }
  const std::uint64_t cases = parse_u64(header[0], 1, "case count");
  if (cases == 0) throw ParseError(1, header[0].column, "case count T must be at least 1");

  std::vector<Instance> out;
  for (std::uint64_t i = 1; i <= cases; ++i) {
    const std::size_t line_no = i + 1;
    if (line_no > lines.size()) {
      throw ParseError(line_no, 0, "missing line for case #" + std::to_string(i) + " of " +
                                       std::to_string(cases));
    }
    const auto tokens = tokenize(lines[line_no - 1]);
    if (tokens.size() != 2) {
      throw ParseError(line_no, 0, "expected 'S D' (max shyness and digit string), found " +
                                       std::to_string(tokens.size()) + " fields");
    }
    const std::uint64_t max_shyness = parse_u64(tokens[0], line_no, "max shyness");
    const std::string_view digits = tokens[1].text;
    for (std::size_t c = 0; c < digits.size(); ++c) {
      if (std::isdigit(static_cast<unsigned char>(digits[c])) == 0) {
        throw ParseError(line_no, tokens[1].column + c,
                         std::string("non-digit character '") + digits[c] + "' in digit string");
      }
    }
    if (digits.size() - 1 != max_shyness) {
      throw ParseError(line_no, tokens[1].column,
                       "digit string has " + std::to_string(digits.size()) +
                           " digits; expected S+1 = " + std::to_string(max_shyness + 1));
    }
    std::vector<Count> counts;
    counts.reserve(digits.size());
    for (char c : digits) counts.push_back(static_cast<Count>(c - '0'));
    out.push_back(make_instance(i, std::move(counts), line_no));
  }

  for (std::size_t line_no = cases + 2; line_no <= lines.size(); ++line_no) {
    if (!tokenize(lines[line_no - 1]).empty()) {
      throw ParseError(line_no, 0, "more case lines than T = " + std::to_string(cases));
    }
  }
  return out;
}

std::string write_codejam(const std::vector<Instance>& instances) {
  std::ostringstream os;
  os << instances.size() << '\n';
  for (const auto& inst : instances) {
    const auto counts = inst.dist.counts();
    if (counts.empty()) {
      os << "0 0\n";
      continue;
    }
    os << counts.size() - 1 << ' ';
    for (Count c : counts) {
      if (c > 9) {
        throw std::invalid_argument("case #" + std::to_string(inst.case_index) +
                                    " has a count above 9, which the digit format cannot hold");
      }
      os << static_cast<char>('0' + c);
    }
    os << '\n';
  }
  return os.str();
}

std::string write_codejam_results(const std::vector<CaseResult>& results, bool emit_friends) {
  std::string out;
  for (const auto& res : results) {
    out += "Case #" + std::to_string(res.case_index) + ": " + std::to_string(res.r);
    if (emit_friends) {
      out += "\t{";
      if (res.friends) {
        for (std::size_t i = 0; i < res.friends->size(); ++i) {
          if (i != 0) out += ',';
          out += std::to_string((*res.friends)[i]);
        }
      }
      out += '}';
    }
    out += '\n';
  }
  return out;
}

std::vector<Instance> parse_native(std::string_view text) {
  std::vector<Instance> out;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const auto tokens = tokenize(lines[idx]);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    std::vector<Count> counts;
    counts.reserve(tokens.size());
    for (const auto& token : tokens) counts.push_back(parse_u64(token, line_no, "count"));
    out.push_back(make_instance(out.size() + 1, std::move(counts), line_no));
  }
  return out;
}

std::string write_native(const std::vector<Instance>& instances) {
  std::string out;
  for (const auto& inst : instances) {
    const auto counts = inst.dist.counts();
    if (counts.empty()) {
      out += "0\n";
      continue;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(counts[i]);
    }
    out += '\n';
  }
  return out;
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) noexcept {
  const std::uint64_t draw = next();
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return draw;
  __extension__ using u128 = unsigned __int128;
  const u128 scaled = static_cast<u128>(draw) * (span + 1);
  return lo + static_cast<std::uint64_t>(scaled >> 64);
}

namespace {

std::vector<Count> draw_counts(SplitMix64& rng, Level k, Count max_count) {
  std::vector<Count> counts(k + 1);
  for (Level i = 0; i < k; ++i) counts[i] = rng.uniform(0, max_count);
  counts[k] = rng.uniform(1, max_count);
  return counts;
}

}  // namespace

ShynessDistribution random_instance(std::uint64_t seed, Level max_k, Count max_count) {
  if (max_count < 1) throw std::invalid_argument("max_count must be at least 1");
  SplitMix64 rng(seed);
  const Level k = rng.uniform(0, max_k);
  return ShynessDistribution(draw_counts(rng, k, max_count));
}

ShynessDistribution random_instance_with_k(std::uint64_t seed, Level k, Count max_count) {
  if (max_count < 1) throw std::invalid_argument("max_count must be at least 1");
  SplitMix64 rng(seed);
  return ShynessDistribution(draw_counts(rng, k, max_count));
}

std::vector<Instance> random_batch(std::uint64_t seed, std::size_t count, Level max_k,
                                   Count max_count) {
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({i + 1, random_instance(seed + i, max_k, max_count), false});
  }
  return out;
}

}  // namespace ovation
