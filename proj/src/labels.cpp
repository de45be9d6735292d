#include "flagcat/labels.hpp"

#include <sstream>

namespace flagcat {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int_token(const std::string& tok, const std::string& what) {
  if (tok.empty()) throw parse_error(what + ": empty number token");
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error(what + ": bad token '" + tok + "'");
  }
  if (pos != tok.size()) throw parse_error(what + ": bad token '" + tok + "'");
  return v;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "-") return Partition{};
  std::vector<int> parts;
  for (const auto& tok : split(s, ',')) parts.push_back(parse_int_token(tok, "partition"));
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("partition '") + s + "': " + e.what());
  }
}

std::string partition_to_string(const Partition& p) { return join_ints(p.parts()); }

std::string partition_to_display(const Partition& p) {
  return p.empty() ? "-" : join_ints(p.parts());
}

WeightTuple parse_weight_tuple(const std::string& s, int expect_n) {
  std::string body = s;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw parse_error("weight tuple '" + s + "': unbalanced '('");
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw parse_error("weight tuple: empty string");
  std::vector<int> e;
  for (const auto& tok : split(body, ',')) e.push_back(parse_int_token(tok, "weight tuple"));
  WeightTuple a;
  try {
    a = WeightTuple(std::move(e));
  } catch (const std::invalid_argument& err) {
    throw parse_error("weight tuple '" + s + "': " + err.what());
  }
  if (expect_n > 0 && a.n() != expect_n)
    throw parse_error("weight tuple '" + s + "': expected " + std::to_string(expect_n) +
                      " entries, got " + std::to_string(a.n()));
  return a;
}

std::string weight_tuple_to_string(const WeightTuple& a) { return join_ints(a.entries()); }

PartitionTuple parse_partition_tuple(const std::string& s, int expect_n) {
  std::vector<Partition> comps;
  for (const auto& tok : split(s, ';')) comps.push_back(parse_partition(tok));
  PartitionTuple t(std::move(comps));
  if (expect_n > 0 && t.n() != expect_n)
    throw parse_error("partition tuple '" + s + "': expected " + std::to_string(expect_n) +
                      " components, got " + std::to_string(t.n()));
  return t;
}

std::string partition_tuple_key(const PartitionTuple& t) {
  std::ostringstream os;
  for (int i = 0; i < t.n(); ++i) {
    if (i) os << ';';
    os << partition_to_string(t[i]);
  }
  return os.str();
}

std::string partition_tuple_display(const PartitionTuple& t) {
  std::ostringstream os;
  for (int i = 0; i < t.n(); ++i) {
    if (i) os << ';';
    os << partition_to_display(t[i]);
  }
  return os.str();
}

namespace {

struct LabelParts {
  char letter = 0;
  char open = 0;  // '(' or '['
  std::string body;
};

LabelParts split_label(const std::string& s) {
  if (s.size() < 3) throw parse_error("label '" + s + "': too short");
  LabelParts lp;
  lp.letter = s[0];
  lp.open = s[1];
  char close = lp.open == '(' ? ')' : ']';
  if ((lp.open != '(' && lp.open != '[') || s.back() != close)
    throw parse_error("label '" + s + "': expected KIND(…) or KIND[…]");
  lp.body = s.substr(2, s.size() - 3);
  return lp;
}

}  // namespace

ObjectLabel parse_object_label(const std::string& s, int expect_n) {
  const LabelParts lp = split_label(s);
  const bool weight = lp.open == '(';
  switch (lp.letter) {
    case 'P':
      return weight ? principal_projective(parse_weight_tuple(lp.body, expect_n))
                    : indec_projective(parse_partition_tuple(lp.body, expect_n));
    case 'I':
      return weight ? principal_injective(parse_weight_tuple(lp.body, expect_n))
                    : indec_injective(parse_partition_tuple(lp.body, expect_n));
    case 'Q':
      return weight ? principal_projective(parse_weight_tuple(lp.body, expect_n), Side::D)
                    : indec_projective(parse_partition_tuple(lp.body, expect_n), Side::D);
    case 'J':
      return weight ? principal_injective(parse_weight_tuple(lp.body, expect_n), Side::D)
                    : indec_injective(parse_partition_tuple(lp.body, expect_n), Side::D);
    case 'M':
      if (weight) throw parse_error("label '" + s + "': M takes a partition tuple in brackets");
      return simple_label(parse_partition_tuple(lp.body, expect_n));
    default:
      throw parse_error("label '" + s + "': unknown kind letter '" + std::string(1, lp.letter) + "'");
  }
}

std::string object_label_to_string(const ObjectLabel& obj) {
  const bool d_side = obj.side == Side::D;
  char letter;
  switch (obj.kind) {
    case ObjectKind::Simple: letter = 'M'; break;
    case ObjectKind::PrincipalProjective:
    case ObjectKind::IndecProjective: letter = d_side ? 'Q' : 'P'; break;
    case ObjectKind::PrincipalInjective:
    case ObjectKind::IndecInjective: letter = d_side ? 'J' : 'I'; break;
    default: throw std::logic_error("object_label_to_string: unreachable");
  }
  if (obj.principal()) return std::string(1, letter) + "(" + weight_tuple_to_string(obj.weight_index()) + ")";
  return std::string(1, letter) + "[" + partition_tuple_display(obj.tuple_index()) + "]";
}

RepGLabel parse_repg_label(const std::string& s, int expect_n) {
  const LabelParts lp = split_label(s);
  const bool weight = lp.open == '(';
  switch (lp.letter) {
    case 'T':
      return weight ? RepGLabel{RepGKind::T, parse_weight_tuple(lp.body, expect_n)}
                    : RepGLabel{RepGKind::Tlam, parse_partition_tuple(lp.body, expect_n)};
    case 'U':
      return weight ? RepGLabel{RepGKind::U, parse_weight_tuple(lp.body, expect_n)}
                    : RepGLabel{RepGKind::Ulam, parse_partition_tuple(lp.body, expect_n)};
    case 'K':
      if (!weight) throw parse_error("label '" + s + "': K takes a weight tuple in parentheses");
      return RepGLabel{RepGKind::K, parse_weight_tuple(lp.body, expect_n)};
    case 'S':
      if (weight) throw parse_error("label '" + s + "': S takes a partition tuple in brackets");
      return RepGLabel{RepGKind::S, parse_partition_tuple(lp.body, expect_n)};
    case 'F':
      if (weight) throw parse_error("label '" + s + "': F takes a partition tuple in brackets");
      return RepGLabel{RepGKind::Flam, parse_partition_tuple(lp.body, expect_n)};
    default:
      throw parse_error("label '" + s + "': unknown kind letter '" + std::string(1, lp.letter) + "'");
  }
}

std::string repg_label_to_string(const RepGLabel& lab) {
  char letter;
  switch (lab.kind) {
    case RepGKind::T: case RepGKind::Tlam: letter = 'T'; break;
    case RepGKind::U: case RepGKind::Ulam: letter = 'U'; break;
    case RepGKind::K: letter = 'K'; break;
    case RepGKind::S: letter = 'S'; break;
    case RepGKind::Flam: letter = 'F'; break;
    default: throw std::logic_error("repg_label_to_string: unreachable");
  }
  if (lab.weight_indexed())
    return std::string(1, letter) + "(" + weight_tuple_to_string(lab.weight_index()) + ")";
  return std::string(1, letter) + "[" + partition_tuple_display(lab.tuple_index()) + "]";
}

ParsedLabel parse_any_label(const std::string& s, int expect_n) {
  if (s.empty()) throw parse_error("label: empty string");
  ParsedLabel out;
  switch (s[0]) {
    case 'P': case 'I': case 'M': case 'Q': case 'J':
      out.obj = parse_object_label(s, expect_n);
      return out;
    case 'T': case 'U': case 'K': case 'S': case 'F':
      out.is_repg = true;
      out.rep = parse_repg_label(s, expect_n);
      return out;
    default:
      throw parse_error("label '" + s + "': unknown kind letter '" + std::string(1, s[0]) + "'");
  }
}

}  // namespace flagcat
