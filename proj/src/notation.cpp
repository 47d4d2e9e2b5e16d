#include "hurwitz/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace hurwitz {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t position() const { return offset_ + pos_; }
  void advance() { ++pos_; }

  void skip_separators() {
    while (!done() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',')) ++pos_;
  }
  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  /// Reads a positive decimal integer.
  int read_int() {
    const std::size_t start = pos_;
    int value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || end == text_.data() + start) {
      throw ParseError("expected an integer", position());
    }
    pos_ = static_cast<std::size_t>(end - text_.data());
    if (value <= 0) throw ParseError("expected a positive integer", offset_ + start);
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, position()); }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

struct PointRecord {
  int point;
  std::size_t position;
};

Permutation parse_permutation_at(std::string_view text, std::optional<std::size_t> degree,
                                 std::size_t offset) {
  Cursor cur(text, offset);
  cur.skip_spaces();
  if (cur.done()) cur.fail("empty permutation");

  std::vector<std::vector<PointRecord>> cycles;
  const std::size_t after_spaces = cur.position() - offset;
  if (text.substr(after_spaces).starts_with("id")) {
    cur.advance();
    cur.advance();
    cur.skip_spaces();
    if (!cur.done()) cur.fail("unexpected text after 'id'");
  } else {
    while (true) {
      cur.skip_spaces();
      if (cur.done()) break;
      if (cur.peek() != '(') cur.fail("expected '('");
      cur.advance();
      std::vector<PointRecord> cycle;
      while (true) {
        cur.skip_separators();
        if (cur.done()) cur.fail("unterminated cycle");
        if (cur.peek() == ')') break;
        const std::size_t at = cur.position();
        cycle.push_back({cur.read_int(), at});
      }
      if (cycle.empty()) cur.fail("empty cycle");
      cur.advance();
      cycles.push_back(std::move(cycle));
    }
  }

  int largest = 0;
  for (const auto& cycle : cycles)
    for (const auto& rec : cycle) largest = std::max(largest, rec.point);
  const std::size_t d = degree.value_or(static_cast<std::size_t>(largest));
  if (d == 0) throw ParseError("degree is required for 'id'", offset);
  if (d > kMaxDegree) throw ParseError("degree exceeds " + std::to_string(kMaxDegree), offset);

  std::vector<Letter> images(d);
  for (std::size_t x = 0; x < d; ++x) images[x] = static_cast<Letter>(x);
  std::vector<bool> seen(d, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto& rec = cycle[i];
      if (static_cast<std::size_t>(rec.point) > d) {
        throw ParseError("point " + std::to_string(rec.point) + " exceeds degree " +
                             std::to_string(d),
                         rec.position);
      }
      const auto x = static_cast<std::size_t>(rec.point - 1);
      if (seen[x]) {
        throw ParseError("point " + std::to_string(rec.point) + " appears twice", rec.position);
      }
      seen[x] = true;
      images[x] = static_cast<Letter>(cycle[(i + 1) % cycle.size()].point - 1);
    }
  }
  return Permutation::unchecked(std::move(images));
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(separator, start);
    pieces.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return pieces;
}

CycleType parse_cycle_type_at(std::string_view text, std::size_t degree, std::size_t offset) {
  std::vector<int> parts;
  int total = 0;
  Cursor cur(text, offset);
  cur.skip_spaces();
  while (!cur.done()) {
    const int part = cur.read_int();
    int repeat = 1;
    cur.skip_spaces();
    if (!cur.done() && cur.peek() == '^') {
      cur.advance();
      cur.skip_spaces();
      repeat = cur.read_int();
    }
    for (int i = 0; i < repeat; ++i) parts.push_back(part);
    total += part * repeat;
    if (static_cast<std::size_t>(total) > degree) {
      throw ParseError("parts exceed the degree " + std::to_string(degree), cur.position());
    }
    cur.skip_spaces();
    if (cur.done()) break;
    if (cur.peek() != ',') cur.fail("expected ','");
    cur.advance();
    cur.skip_spaces();
    if (cur.done()) cur.fail("expected a part");
  }
  parts.insert(parts.end(), degree - static_cast<std::size_t>(total), 1);
  if (parts.empty()) throw ParseError("degree must be positive", offset);
  return CycleType(std::move(parts));
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree) {
  return parse_permutation_at(text, degree, 0);
}

std::string format_permutation(const Permutation& p) {
  if (p.is_identity()) return "id";
  std::string out;
  for (const auto& cycle : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

CycleType parse_cycle_type(std::string_view text, std::size_t degree) {
  return parse_cycle_type_at(text, degree, 0);
}

std::string format_cycle_type(const CycleType& ct) {
  std::string out;
  for (std::size_t i = 0; i < ct.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ct.parts()[i]);
  }
  return out;
}

RamificationProfile parse_profile(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw ParseError("degree must lie in 1.." + std::to_string(kMaxDegree), 0);
  }
  const auto pieces = split(text, '|');
  if (pieces.size() != 4) {
    throw ParseError("a profile needs four classes separated by '|', got " +
                         std::to_string(pieces.size()),
                     0);
  }
  std::array<CycleType, 4> classes;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    classes[i] = parse_cycle_type_at(pieces[i], degree, offset);
    offset += pieces[i].size() + 1;
  }
  return RamificationProfile(std::move(classes));
}

std::string format_profile(const RamificationProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += '|';
    out += format_cycle_type(profile[i]);
  }
  return out;
}

MonodromyTuple parse_tuple(std::string_view text, std::optional<std::size_t> degree) {
  const auto pieces = split(text, ';');
  if (pieces.size() != 4) {
    throw ParseError("a tuple needs four permutations separated by ';', got " +
                         std::to_string(pieces.size()),
                     0);
  }
  if (!degree) {
    // Infer from the largest point listed anywhere in the tuple.
    std::size_t largest = 0;
    std::size_t offset = 0;
    for (const auto piece : pieces) {
      const auto trimmed = piece.find_first_not_of(" \t");
      if (trimmed == std::string_view::npos || piece.substr(trimmed).starts_with("id")) {
        offset += piece.size() + 1;
        continue;
      }
      largest = std::max(largest, parse_permutation_at(piece, std::nullopt, offset).degree());
      offset += piece.size() + 1;
    }
    if (largest == 0) throw ParseError("cannot infer the degree; pass it explicitly", 0);
    degree = largest;
  }
  std::array<Permutation, 4> entries;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    entries[i] = parse_permutation_at(pieces[i], degree, offset);
    offset += pieces[i].size() + 1;
  }
  return MonodromyTuple(std::move(entries));
}

std::string format_tuple(const MonodromyTuple& r) {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += "; ";
    out += format_permutation(r[i]);
  }
  return out;
}

}  // namespace hurwitz
