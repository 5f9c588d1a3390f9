#include "mpbe/algebra.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mpbe/errors.hpp"

namespace mpbe {

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Elem>(std::countr_zero(b)));
  return out;
}

UnaryMap UnaryMap::identity(std::size_t n) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Elem>(i);
  return UnaryMap(std::move(v));
}

UnaryMap UnaryMap::after(const UnaryMap& inner) const {
  std::vector<Elem> v(inner.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = images_[inner.images_[i]];
  return UnaryMap(std::move(v));
}

ElementSet UnaryMap::image() const {
  ElementSet s;
  for (Elem e : images_) s.insert(e);
  return s;
}

bool UnaryMap::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> element_names, Elem one,
                             std::optional<Elem> zero, Table arrow, Table squig)
    : name_(std::move(name)),
      names_(std::move(element_names)),
      one_(one),
      zero_(zero),
      arrow_(std::move(arrow)),
      squig_(std::move(squig)) {
  const std::size_t n = names_.size();
  if (n == 0 || n > kMaxElements) throw InvalidAlgebra("carrier size must be in 1..64");
  std::set<std::string> seen;
  for (const auto& t : names_) {
    if (t.empty()) throw InvalidAlgebra("empty element name");
    if (!seen.insert(t).second) throw InvalidAlgebra("duplicate element name '" + t + "'");
  }
  if (one_ >= n) throw InvalidAlgebra("constant 1 out of range");
  if (zero_ && *zero_ >= n) throw InvalidAlgebra("constant 0 out of range");
  if (arrow_.size() != n || squig_.size() != n) throw InvalidAlgebra("table size differs from carrier size");
  for (const Table* t : {&arrow_, &squig_})
    for (Elem v : t->cells())
      if (v >= n) throw InvalidAlgebra("table entry out of range");
}

std::optional<Elem> FiniteAlgebra::find(std::string_view token) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == token) return static_cast<Elem>(i);
  return std::nullopt;
}

std::string FiniteAlgebra::format_set(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.members()) {
    if (!first) out += ' ';
    out += names_[e];
    first = false;
  }
  return out + "}";
}

std::string FiniteAlgebra::format_tuple(std::span<const Elem> t) const {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += names_[t[i]];
  }
  return out + ")";
}

const UnaryMap* AlgebraDocument::find_map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m.map;
  return nullptr;
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_keyword(const std::string& w) {
  return w == "algebra" || w == "elements" || w == "one" || w == "zero" || w == "arrow" || w == "squig" ||
         w == "unary" || w == "end";
}

struct Parser {
  std::string name;
  std::vector<std::string> elements;
  std::optional<std::size_t> one_line, zero_line;
  std::string one_tok, zero_tok;
  std::vector<std::vector<std::string>> arrow_rows, squig_rows;
  bool have_name = false, have_elements = false, have_arrow = false, have_squig = false, ended = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> unary;
  std::vector<std::size_t> unary_lines;

  enum class Block { none, arrow, squig, unary } block = Block::none;
  std::size_t block_line = 0;

  Elem resolve(const std::string& tok, std::size_t line) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == tok) return static_cast<Elem>(i);
    throw ParseError(line, "undeclared element '" + tok + "'");
  }

  void need_elements(std::size_t line, const char* what) const {
    if (!have_elements) throw ParseError(line, std::string(what) + " before 'elements'");
  }

  void close_block(std::size_t line) {
    const std::size_t n = elements.size();
    if (block == Block::arrow && arrow_rows.size() != n)
      throw ParseError(line, "arrow table has " + std::to_string(arrow_rows.size()) + " rows, expected " +
                                 std::to_string(n));
    if (block == Block::squig && squig_rows.size() != n)
      throw ParseError(line, "squig table has " + std::to_string(squig_rows.size()) + " rows, expected " +
                                 std::to_string(n));
    if (block == Block::unary && unary.back().second.empty())
      throw ParseError(line, "unary '" + unary.back().first + "' has no image row");
    block = Block::none;
  }

  void feed(const std::vector<std::string>& w, std::size_t line) {
    if (ended) throw ParseError(line, "content after 'end'");
    const std::size_t n = elements.size();
    // Rows belonging to an open block.
    if (block == Block::arrow || block == Block::squig) {
      auto& rows = block == Block::arrow ? arrow_rows : squig_rows;
      if (rows.size() < n) {
        if (w.size() != n && is_keyword(w[0])) close_block(line);
        if (w.size() != n)
          throw ParseError(line, "row has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
        for (const auto& t : w) resolve(t, line);
        rows.push_back(w);
        if (rows.size() == n) block = Block::none;
        return;
      }
    }
    if (block == Block::unary) {
      if (w.size() != n && is_keyword(w[0])) close_block(line);
      if (w.size() != n)
        throw ParseError(line, "row has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
      for (const auto& t : w) resolve(t, line);
      unary.back().second = w;
      block = Block::none;
      return;
    }
    const std::string& key = w[0];
    if (!have_name && key != "algebra") throw ParseError(line, "document must start with 'algebra <name>'");
    if (key == "algebra") {
      if (have_name) throw ParseError(line, "duplicate section 'algebra'");
      if (w.size() != 2) throw ParseError(line, "expected 'algebra <name>'");
      name = w[1];
      have_name = true;
    } else if (key == "elements") {
      if (have_elements) throw ParseError(line, "duplicate section 'elements'");
      if (w.size() < 2) throw ParseError(line, "'elements' needs at least one token");
      if (w.size() - 1 > kMaxElements) throw ParseError(line, "more than 64 elements");
      std::set<std::string> seen;
      for (std::size_t i = 1; i < w.size(); ++i)
        if (!seen.insert(w[i]).second) throw ParseError(line, "duplicate element name '" + w[i] + "'");
      elements.assign(w.begin() + 1, w.end());
      have_elements = true;
    } else if (key == "one" || key == "zero") {
      need_elements(line, key.c_str());
      auto& slot = key == "one" ? one_line : zero_line;
      if (slot) throw ParseError(line, "duplicate section '" + key + "'");
      if (w.size() != 2) throw ParseError(line, "expected '" + key + " <element>'");
      resolve(w[1], line);
      slot = line;
      (key == "one" ? one_tok : zero_tok) = w[1];
    } else if (key == "arrow" || key == "squig") {
      need_elements(line, key.c_str());
      bool& have = key == "arrow" ? have_arrow : have_squig;
      if (have) throw ParseError(line, "duplicate section '" + key + "'");
      if (w.size() != 1) throw ParseError(line, "'" + key + "' takes no arguments");
      have = true;
      block = key == "arrow" ? Block::arrow : Block::squig;
      block_line = line;
    } else if (key == "unary") {
      need_elements(line, "unary");
      if (w.size() != 2) throw ParseError(line, "expected 'unary <name>'");
      for (const auto& u : unary)
        if (u.first == w[1]) throw ParseError(line, "duplicate section 'unary " + w[1] + "'");
      unary.emplace_back(w[1], std::vector<std::string>{});
      unary_lines.push_back(line);
      block = Block::unary;
      block_line = line;
    } else if (key == "end") {
      if (w.size() != 1) throw ParseError(line, "'end' takes no arguments");
      if (!have_elements) throw ParseError(line, "missing section 'elements'");
      if (!one_line) throw ParseError(line, "missing section 'one'");
      if (!have_arrow) throw ParseError(line, "missing section 'arrow'");
      if (!have_squig) throw ParseError(line, "missing section 'squig'");
      ended = true;
    } else {
      throw ParseError(line, "unknown keyword '" + key + "'");
    }
  }

  AlgebraDocument finish() const {
    const std::size_t n = elements.size();
    auto table = [&](const std::vector<std::vector<std::string>>& rows) {
      Table t(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.at(static_cast<Elem>(i), static_cast<Elem>(j)) = resolve(rows[i][j], 0);
      return t;
    };
    std::optional<Elem> zero;
    if (zero_line) zero = resolve(zero_tok, *zero_line);
    AlgebraDocument doc{FiniteAlgebra(name, elements, resolve(one_tok, *one_line), zero, table(arrow_rows),
                                      table(squig_rows)),
                        {}};
    for (const auto& [uname, row] : unary) {
      std::vector<Elem> img;
      for (const auto& t : row) img.push_back(resolve(t, 0));
      doc.maps.push_back({uname, UnaryMap(std::move(img))});
    }
    return doc;
  }
};

}  // namespace

AlgebraDocument parse_algebra(std::string_view text) {
  Parser p;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (!words.empty()) {
      p.feed(words, line_no);
    }
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  if (p.block != Parser::Block::none) p.close_block(line_no);
  if (!p.have_name) throw ParseError(line_no, "missing section 'algebra'");
  if (!p.ended) throw ParseError(line_no, "missing 'end'");
  return p.finish();
}

AlgebraDocument load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string serialize(const FiniteAlgebra& a, std::span<const NamedMap> maps) {
  const auto& names = a.element_names();
  auto row = [&](auto&& get) {
    std::string s;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) s += ' ';
      s += names[get(static_cast<Elem>(j))];
    }
    return s + '\n';
  };
  std::string out = "algebra " + a.name() + "\nelements";
  for (const auto& t : names) out += ' ' + t;
  out += "\none " + names[a.one()] + '\n';
  if (a.zero()) out += "zero " + names[*a.zero()] + '\n';
  out += "arrow\n";
  for (std::size_t i = 0; i < a.size(); ++i) out += row([&](Elem j) { return a.arrow(static_cast<Elem>(i), j); });
  out += "squig\n";
  for (std::size_t i = 0; i < a.size(); ++i) out += row([&](Elem j) { return a.squig(static_cast<Elem>(i), j); });
  for (const auto& m : maps) {
    out += "unary " + m.name + '\n';
    out += row([&](Elem j) { return m.map(j); });
  }
  return out + "end\n";
}

}  // namespace mpbe
