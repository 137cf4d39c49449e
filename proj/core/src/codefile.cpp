#include "flagcodes/codefile.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

#include "flagcodes/error.hpp"

namespace flagcodes {
namespace {

void write_header(std::ostringstream& os, std::string_view magic, const FieldSpec& spec, std::size_t n,
                  const std::string& type, std::size_t count) {
  os << magic << " v1\n";
  os << "field p=" << spec.p << " e=" << spec.e;
  if (spec.tower) os << " tower=" << spec.tower->first << ',' << spec.tower->second;
  os << "\nambient n=" << n << "\ntype " << type << "\ncount " << count << '\n';
}

void write_subspace(std::ostringstream& os, const Subspace& s) {
  os << "subspace k=" << s.dim() << '\n';
  if (s.dim() > 0) os << to_text(s.basis());
}

void check_spec_matches(const FieldSpec& spec, const FieldPtr& f) {
  if (spec.p != f->characteristic() || spec.e != f->prime_degree()) {
    throw Error(Errc::FieldMismatch, "field spec does not describe the code's field");
  }
}

struct Token {
  std::string_view text;
  std::size_t column;
};

// Line-oriented reader that remembers positions for error messages.
class Reader {
 public:
  explicit Reader(const std::string& text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      std::string_view line(text.data() + start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      start = end + 1;
    }
    while (!lines_.empty() && lines_.back().find_first_not_of(" \t") == std::string_view::npos) lines_.pop_back();
  }

  // Tokens of the next line; fails at end of input.
  std::vector<Token> next_line(const char* expecting) {
    if (pos_ >= lines_.size()) {
      throw ParseError(lines_.size() + 1, 1, std::string("unexpected end of input, expected ") + expecting);
    }
    current_ = pos_++;
    std::vector<Token> out;
    std::string_view l = lines_[current_];
    std::size_t i = 0;
    while (i < l.size()) {
      while (i < l.size() && (l[i] == ' ' || l[i] == '\t')) ++i;
      if (i >= l.size()) break;
      const std::size_t b = i;
      while (i < l.size() && l[i] != ' ' && l[i] != '\t') ++i;
      out.push_back({l.substr(b, i - b), b + 1});
    }
    if (out.empty()) fail(1, std::string("blank line, expected ") + expecting);
    return out;
  }

  bool at_end() const { return pos_ >= lines_.size(); }
  std::size_t line() const { return current_ + 1; }
  [[noreturn]] void fail(std::size_t column, const std::string& msg) const { throw ParseError(line(), column, msg); }
  [[noreturn]] void fail_at_next(const std::string& msg) const { throw ParseError(pos_ + 1, 1, msg); }

  std::uint64_t number(const Token& t, std::string_view s, std::size_t offset = 0) const {
    std::uint64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last) {
      fail(t.column + offset, "expected a non-negative integer, got '" + std::string(s) + "'");
    }
    return v;
  }

  // Value of `key=value`.
  std::string_view keyed(const Token& t, std::string_view key) const {
    const std::string prefix = std::string(key) + "=";
    if (t.text.substr(0, prefix.size()) != prefix) fail(t.column, "expected '" + prefix + "...'");
    return t.text.substr(prefix.size());
  }

  void expect_words(const std::vector<Token>& toks, std::initializer_list<std::string_view> words) const {
    std::size_t i = 0;
    for (std::string_view w : words) {
      if (i >= toks.size()) fail(toks.empty() ? 1 : toks.back().column + toks.back().text.size(), "expected '" + std::string(w) + "'");
      if (toks[i].text != w) fail(toks[i].column, "expected '" + std::string(w) + "', got '" + std::string(toks[i].text) + "'");
      ++i;
    }
    if (i < toks.size()) fail(toks[i].column, "unexpected '" + std::string(toks[i].text) + "'");
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
  std::size_t current_ = 0;
};

struct Header {
  FieldSpec spec;
  FieldPtr field;
  std::size_t n = 0;
  std::vector<std::size_t> dims;
  std::size_t count = 0;
};

Header read_header(Reader& r, std::string_view magic) {
  Header h;
  r.expect_words(r.next_line("format line"), {magic, "v1"});

  auto toks = r.next_line("field line");
  if (toks[0].text != "field") r.fail(toks[0].column, "expected 'field'");
  if (toks.size() < 3 || toks.size() > 4) r.fail(toks[0].column, "expected 'field p=<p> e=<e> [tower=<k>,<s>]'");
  h.spec.p = static_cast<std::uint32_t>(r.number(toks[1], r.keyed(toks[1], "p"), 2));
  h.spec.e = static_cast<std::uint32_t>(r.number(toks[2], r.keyed(toks[2], "e"), 2));
  if (toks.size() == 4) {
    const std::string_view v = r.keyed(toks[3], "tower");
    const std::size_t comma = v.find(',');
    if (comma == std::string_view::npos) r.fail(toks[3].column, "expected 'tower=<k>,<s>'");
    const std::size_t k = r.number(toks[3], v.substr(0, comma), 6);
    const std::size_t s = r.number(toks[3], v.substr(comma + 1), 7 + comma);
    h.spec.tower = std::make_pair(k, s);
  }
  try {
    h.field = h.spec.make();
  } catch (const Error& e) {
    r.fail(toks[1].column, e.what());
  }

  toks = r.next_line("ambient line");
  if (toks.size() != 2 || toks[0].text != "ambient") r.fail(toks[0].column, "expected 'ambient n=<n>'");
  h.n = r.number(toks[1], r.keyed(toks[1], "n"), 2);
  if (h.n == 0) r.fail(toks[1].column, "ambient dimension must be positive");

  toks = r.next_line("type line");
  if (toks.size() != 2 || toks[0].text != "type") r.fail(toks[0].column, "expected 'type t1,...,tr'");
  std::string_view list = toks[1].text;
  std::size_t offset = 0;
  while (true) {
    const std::size_t comma = list.find(',', offset);
    const std::string_view item = list.substr(offset, comma == std::string_view::npos ? std::string_view::npos : comma - offset);
    h.dims.push_back(r.number(toks[1], item, offset));
    if (comma == std::string_view::npos) break;
    offset = comma + 1;
  }

  toks = r.next_line("count line");
  if (toks.size() != 2 || toks[0].text != "count") r.fail(toks[0].column, "expected 'count <N>'");
  h.count = r.number(toks[1], toks[1].text);
  if (h.count == 0) r.fail(toks[1].column, "a code needs at least one member");
  return h;
}

Subspace read_subspace(Reader& r, const Header& h, std::size_t expected_dim) {
  auto toks = r.next_line("'subspace k=<k>'");
  if (toks.size() != 2 || toks[0].text != "subspace") r.fail(toks[0].column, "expected 'subspace k=<k>'");
  const std::size_t k = r.number(toks[1], r.keyed(toks[1], "k"), 2);
  if (k != expected_dim) {
    r.fail(toks[1].column + 2, "subspace dimension " + std::to_string(k) + " differs from type dimension " +
                                   std::to_string(expected_dim));
  }
  const std::size_t header_line = r.line();
  std::vector<Element> data;
  data.reserve(k * h.n);
  for (std::size_t i = 0; i < k; ++i) {
    auto row = r.next_line("a matrix row");
    if (row.size() != h.n) {
      r.fail(row.size() > h.n ? row[h.n].column : row.back().column,
             "expected " + std::to_string(h.n) + " entries, got " + std::to_string(row.size()));
    }
    for (const Token& t : row) {
      const std::uint64_t v = r.number(t, t.text);
      if (!h.field->contains(v)) r.fail(t.column, "entry " + std::to_string(v) + " outside GF(" + std::to_string(h.field->order()) + ")");
      data.push_back(static_cast<Element>(v));
    }
  }
  Subspace s(Matrix(h.field, k, h.n, std::move(data)));
  if (s.dim() != k) throw ParseError(header_line, 1, "subspace rows are linearly dependent");
  return s;
}

}  // namespace

std::string serialize_flag_code(const FlagCode& code, const FieldSpec& spec) {
  check_spec_matches(spec, code.field());
  std::ostringstream os;
  write_header(os, "FLAGCODE", spec, code.ambient(), code.type().to_string(), code.size());
  for (const Flag& f : code.members()) {
    os << "flag\n";
    for (const Subspace& s : f.subspaces()) write_subspace(os, s);
  }
  return os.str();
}

std::string serialize_subspace_code(const SubspaceCode& code, const FieldSpec& spec) {
  check_spec_matches(spec, code.field());
  std::ostringstream os;
  write_header(os, "SUBCODE", spec, code.ambient(), std::to_string(code.dim()), code.size());
  for (const Subspace& s : code.members()) write_subspace(os, s);
  return os.str();
}

FlagCodeFile parse_flag_code(const std::string& text) {
  Reader r(text);
  Header h = read_header(r, "FLAGCODE");
  std::optional<TypeVector> type;
  try {
    type.emplace(h.dims, h.n);
  } catch (const Error& e) {
    throw ParseError(4, 6, e.what());
  }
  std::vector<Flag> flags;
  flags.reserve(h.count);
  for (std::size_t i = 0; i < h.count; ++i) {
    r.expect_words(r.next_line("'flag'"), {"flag"});
    const std::size_t flag_line = r.line();
    std::vector<Subspace> subs;
    for (std::size_t t : type->dims()) subs.push_back(read_subspace(r, h, t));
    try {
      flags.emplace_back(std::move(subs));
    } catch (const Error& e) {
      throw ParseError(flag_line, 1, e.what());
    }
  }
  if (!r.at_end()) r.fail_at_next("trailing content after " + std::to_string(h.count) + " flags");
  FlagCode code(flags);
  if (code.size() != h.count) throw ParseError(5, 7, "file lists duplicate flags");
  return {h.spec, std::move(code)};
}

SubspaceCodeFile parse_subspace_code(const std::string& text) {
  Reader r(text);
  Header h = read_header(r, "SUBCODE");
  if (h.dims.size() != 1 || h.dims[0] > h.n) throw ParseError(4, 6, "expected a single dimension at most n");
  std::vector<Subspace> subs;
  subs.reserve(h.count);
  for (std::size_t i = 0; i < h.count; ++i) subs.push_back(read_subspace(r, h, h.dims[0]));
  if (!r.at_end()) r.fail_at_next("trailing content after " + std::to_string(h.count) + " subspaces");
  SubspaceCode code(subs);
  if (code.size() != h.count) throw ParseError(5, 7, "file lists duplicate subspaces");
  return {h.spec, std::move(code)};
}

}  // namespace flagcodes
