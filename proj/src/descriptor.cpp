#include <cctype>
#include <charconv>

#include "shtk/classification.hpp"

namespace shtk {

namespace {

struct Piece {
  std::string text;
  std::size_t offset;
  bool bracketed;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!is_space(c)) out += c;
  return out;
}

// Splits on '+' outside parentheses and brackets.
std::vector<Piece> split_top(std::string_view text) {
  std::vector<Piece> out;
  int paren = 0;
  int bracket = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view raw = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < raw.size() && is_space(raw[lead])) ++lead;
    std::string s = strip(raw);
    if (s.empty()) throw ParseError("empty summand", start + lead);
    bool br = s.front() == '[';
    if (br) {
      if (s.back() != ']') throw ParseError("unterminated '['", start + lead);
      s = s.substr(1, s.size() - 2);
      if (s.find('>') == std::string::npos) throw ParseError("bracketed summand must be a raw pair 'big>small'", start + lead);
    }
    out.push_back({s, start + lead, br});
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++paren;
    else if (c == ')') {
      if (--paren < 0) throw ParseError("unbalanced ')'", i);
    } else if (c == '[') {
      if (bracket++ > 0) throw ParseError("nested '['", i);
    } else if (c == ']') {
      if (--bracket < 0) throw ParseError("unbalanced ']'", i);
    } else if (c == '+' && paren == 0 && bracket == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (paren != 0) throw ParseError("unbalanced '('", text.size());
  if (bracket != 0) throw ParseError("unbalanced '['", text.size());
  flush(text.size());
  return out;
}

int parse_int(const std::string& s, std::size_t offset) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected an integer, got '" + s + "'", offset);
  return v;
}

std::optional<CaseSummand> try_case(const Piece& piece) {
  const std::string& s = piece.text;
  const auto colon = s.find(':');
  const std::string tag_text = s.substr(0, colon);
  auto tag = parse_case_tag(tag_text);
  if (!tag) return std::nullopt;
  CaseSummand c;
  c.tag = *tag;
  if (colon != std::string::npos) {
    const std::string params = s.substr(colon + 1);
    if (params.empty()) throw ParseError("empty parameter list", piece.offset + colon + 1);
    // split on commas at paren depth 0
    std::vector<std::pair<std::string, std::size_t>> items;
    int depth = 0;
    std::size_t st = 0;
    for (std::size_t i = 0; i <= params.size(); ++i) {
      if (i == params.size() || (params[i] == ',' && depth == 0)) {
        items.emplace_back(params.substr(st, i - st), piece.offset + colon + 1 + st);
        st = i + 1;
      } else if (params[i] == '(') {
        ++depth;
      } else if (params[i] == ')') {
        --depth;
      }
    }
    for (const auto& [kv, off] : items) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value, got '" + kv + "'", off);
      const std::string key = kv.substr(0, eq);
      const std::string val = kv.substr(eq + 1);
      auto set_int = [&](std::optional<int>& slot) {
        if (slot) throw ParseError("duplicate parameter '" + key + "'", off);
        slot = parse_int(val, off + eq + 1);
      };
      if (key == "p") set_int(c.p);
      else if (key == "q") set_int(c.q);
      else if (key == "n") set_int(c.n);
      else if (key == "g") {
        if (c.g) throw ParseError("duplicate parameter 'g'", off);
        if (val.empty()) throw ParseError("empty algebra name", off + eq + 1);
        try {
          c.g = to_string(parse_algebra_name(val));
        } catch (const DomainError& e) {
          throw ParseError(e.what(), off + eq + 1);
        }
      } else {
        throw ParseError("unknown parameter '" + key + "'", off);
      }
    }
  }
  check_side_conditions(c);
  return c;
}

}  // namespace

PairDescriptor parse_descriptor(std::string_view text) {
  if (strip(text).empty()) throw ParseError("empty descriptor", 0);
  const std::string lowered = strip(text);
  if (lowered.find("Spin") != std::string::npos || lowered.find("spin") != std::string::npos) {
    std::string msg = "non-symmetric pair with a Spin embedding is not constructible;";
    msg += " see documented_nonsymmetric_pairs():";
    for (const auto& d : documented_nonsymmetric_pairs()) msg += std::string(" ") + d.text + ";";
    throw DomainError(msg);
  }

  PairDescriptor d;
  std::string pending;  // bare names waiting for the next raw pair
  std::size_t pending_offset = 0;
  bool last_open = false;  // last summand is an unbracketed raw pair
  for (const auto& piece : split_top(text)) {
    if (!piece.bracketed) {
      if (auto c = try_case(piece)) {
        if (!pending.empty()) throw ParseError("algebra name '" + pending + "' is not part of a pair", pending_offset);
        d.summands.emplace_back(*c);
        last_open = false;
        continue;
      }
    }
    const auto gt = piece.text.find('>');
    if (gt != std::string::npos) {
      if (piece.text.find('>', gt + 1) != std::string::npos) throw ParseError("more than one '>'", piece.offset);
      RawPair r{piece.text.substr(0, gt), piece.text.substr(gt + 1)};
      if (r.big.empty()) throw ParseError("empty big side", piece.offset);
      if (r.small.empty()) throw ParseError("empty small side", piece.offset + gt + 1);
      if (piece.bracketed && !pending.empty())
        throw ParseError("algebra name '" + pending + "' is not part of a pair", pending_offset);
      if (!pending.empty()) r.big = pending + "+" + r.big;
      pending.clear();
      d.summands.emplace_back(std::move(r));
      last_open = !piece.bracketed;
      continue;
    }
    if (piece.text.find(':') != std::string::npos)
      throw ParseError("unknown case tag in '" + piece.text + "'", piece.offset);
    if (last_open) {
      std::get<RawPair>(d.summands.back()).small += "+" + piece.text;
    } else {
      if (pending.empty()) pending_offset = piece.offset;
      pending = pending.empty() ? piece.text : pending + "+" + piece.text;
    }
  }
  if (!pending.empty()) throw ParseError("algebra name '" + pending + "' is not part of a pair", pending_offset);
  return d;
}

std::string to_string(const DescriptorSummand& s) {
  if (const auto* c = std::get_if<CaseSummand>(&s)) return to_string(*c);
  const auto& r = std::get<RawPair>(s);
  return r.big + ">" + r.small;
}

std::string to_string(const PairDescriptor& d) {
  std::string out;
  const bool many = d.summands.size() > 1;
  for (const auto& s : d.summands) {
    if (!out.empty()) out += " + ";
    const bool raw = std::holds_alternative<RawPair>(s);
    out += raw && many ? "[" + to_string(s) + "]" : to_string(s);
  }
  return out;
}

const std::vector<DocumentedPair>& documented_nonsymmetric_pairs() {
  static const std::vector<DocumentedPair> pairs = {
      {"SO(8,C)>Spin(7,C)", "uniformly bounded; the involution of so(8,C) does not lift to SO(8,C)"},
      {"SO(4,4)>Spin(4,3)", "uniformly bounded; the involution of so(4,4) does not lift to SO(4,4)"},
  };
  return pairs;
}

}  // namespace shtk
