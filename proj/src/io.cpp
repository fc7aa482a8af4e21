#include "cpgset/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cpgset/error.hpp"

namespace cpgset {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t const start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void format_error(std::size_t line, std::string const& what) {
  throw Error(ErrorKind::FormatError, {line}, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    format_error(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(content_lines(text)) {}

  bool done() const { return next_ == lines_.size(); }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  Line const& take(char const* expecting) {
    if (done()) format_error(last_line(), std::string("unexpected end of input, expected ") + expecting);
    return lines_[next_++];
  }
  std::size_t header_line() const { return header_line_; }
  Line const* peek() const { return done() ? nullptr : &lines_[next_]; }

  // "<keyword> <k integers>"
  std::vector<std::size_t> header(std::string_view keyword, std::size_t count) {
    Line const& l = take(std::string(keyword).c_str());
    header_line_ = l.number;
    if (l.tokens.front() != keyword) format_error(l.number, "expected '" + std::string(keyword) + "' header");
    if (l.tokens.size() != count + 1) format_error(l.number, "wrong number of header fields");
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) out.push_back(parse_index(l.tokens[i], l.number));
    return out;
  }

  std::vector<std::vector<Element>> rows(std::size_t count, std::size_t width) {
    std::vector<std::vector<Element>> out;
    for (std::size_t r = 0; r < count; ++r) {
      Line const& l = take("a table row");
      if (l.tokens.size() != width) {
        format_error(l.number, "expected " + std::to_string(width) + " entries, got " + std::to_string(l.tokens.size()));
      }
      std::vector<Element> row;
      for (auto t : l.tokens) {
        std::size_t const v = parse_index(t, l.number);
        if (v >= 1U << 30) format_error(l.number, "index too large");
        row.push_back(static_cast<Element>(v));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  void finish() {
    if (!done()) format_error(lines_[next_].number, "trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t header_line_ = 1;
};

FiniteGroup group_block(Cursor& c) {
  std::size_t const n = c.header("group", 1)[0];
  if (n == 0) format_error(c.last_line(), "group order must be positive");
  return validate_group(c.rows(n, n));
}

void write_rows(std::ostringstream& out, std::vector<std::vector<Element>> const& rows, std::string_view sep) {
  for (auto const& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) out << ' ';
      out << row[j];
    }
    out << sep;
  }
}

}  // namespace

FileKind detect_kind(std::string_view text) {
  auto const lines = content_lines(text);
  if (lines.empty()) format_error(1, "empty input");
  auto const head = lines.front().tokens.front();
  if (head == "group") return FileKind::Group;
  if (head == "gset") return FileKind::GSet;
  if (head == "semigroup") return FileKind::Semigroup;
  format_error(lines.front().number, "unknown header '" + std::string(head) + "'");
}

FiniteGroup parse_group(std::string_view text) {
  Cursor c(text);
  FiniteGroup g = group_block(c);
  c.finish();
  return g;
}

GSet parse_gset(std::string_view text) {
  Cursor c(text);
  auto const dims = c.header("gset", 2);
  std::size_t const gset_line = c.header_line();
  FiniteGroup g = group_block(c);
  if (g.order() != dims[1]) format_error(gset_line, "group order does not match the gset header");
  if (dims[0] == 0) format_error(gset_line, "carrier must be non-empty");
  auto action = c.rows(dims[0], dims[1]);
  c.finish();
  return validate_gset(std::move(g), action);
}

FiniteSemigroup parse_semigroup(std::string_view text) {
  Cursor c(text);
  std::size_t const n = c.header("semigroup", 1)[0];
  if (n == 0) format_error(c.header_line(), "semigroup order must be positive");
  FiniteSemigroup s = validate_semigroup(c.rows(n, n));
  if (Line const* l = c.peek(); l != nullptr && l->tokens.front() == "zero") {
    c.take("zero");
    if (l->tokens.size() != 2) format_error(l->number, "expected 'zero <index>'");
    std::size_t const z = parse_index(l->tokens[1], l->number);
    if (!s.zero() || *s.zero() != z) format_error(l->number, "declared zero is not the zero element");
  }
  if (Line const* l = c.peek(); l != nullptr && l->tokens.front() == "roles") {
    c.take("roles");
    if (l->tokens.size() != n + 1) format_error(l->number, "expected one role tag per element");
    std::vector<Role> roles;
    for (std::size_t i = 1; i < l->tokens.size(); ++i) {
      auto const tag = l->tokens[i];
      if (tag == "z") {
        roles.push_back({RoleKind::Zero, 0});
      } else if (tag.size() >= 2 && (tag[0] == 'g' || tag[0] == 'x')) {
        auto const source = static_cast<Element>(parse_index(tag.substr(1), l->number));
        roles.push_back({tag[0] == 'g' ? RoleKind::GroupPart : RoleKind::SetPart, source});
      } else {
        format_error(l->number, "bad role tag '" + std::string(tag) + "'");
      }
    }
    s = attach_roles(std::move(s), std::move(roles));
  }
  c.finish();
  return s;
}

std::string serialize(FiniteGroup const& group) {
  FiniteGroup const g = canonical_group(group);
  std::ostringstream out;
  out << "group " << g.order() << '\n';
  write_rows(out, g.rows(), "\n");
  return out.str();
}

std::string serialize(GSet const& x) {
  GSet const c = canonical_gset(x);
  std::ostringstream out;
  out << "gset " << c.carrier_size() << ' ' << c.group().order() << '\n';
  out << serialize(c.group());
  write_rows(out, c.rows(), "\n");
  return out.str();
}

std::string serialize(FiniteSemigroup const& s) {
  std::ostringstream out;
  out << "semigroup " << s.order() << '\n';
  write_rows(out, s.rows(), "\n");
  if (s.zero()) out << "zero " << *s.zero() << '\n';
  if (s.has_roles()) {
    out << "roles";
    for (Role const& r : s.roles()) {
      switch (r.kind) {
        case RoleKind::GroupPart: out << " g" << r.source; break;
        case RoleKind::SetPart: out << " x" << r.source; break;
        case RoleKind::Zero: out << " z"; break;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string serialize_inline(GSet const& x) {
  std::string text = serialize(x);
  std::string out;
  for (char ch : text) {
    if (ch == '\n') out += "; ";
    else out += ch;
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, {}, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cpgset
