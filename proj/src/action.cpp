#include "puzzles/action.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace puzzles {

std::string_view dir_name(Dir dir) {
  switch (dir) {
    case Dir::up: return "up";
    case Dir::down: return "down";
    case Dir::left: return "left";
    case Dir::right: return "right";
  }
  return "?";
}

Dir opposite(Dir dir) {
  switch (dir) {
    case Dir::up: return Dir::down;
    case Dir::down: return Dir::up;
    case Dir::left: return Dir::right;
    case Dir::right: return Dir::left;
  }
  return dir;
}

namespace {

std::string signed_deg(int degrees) {
  return (degrees >= 0 ? "+" : "-") + std::to_string(degrees >= 0 ? degrees : -degrees);
}

char axis_char(Axis axis) { return axis == Axis::x ? 'x' : axis == Axis::y ? 'y' : 'z'; }

struct RenderVisitor {
  std::string operator()(const Move& a) const { return std::string(dir_name(a.dir)); }
  std::string operator()(const Slide& a) const {
    return "slide(" + std::string(1, a.vehicle) + "," + std::string(dir_name(a.dir)) + "," +
           std::to_string(a.distance) + ")";
  }
  std::string operator()(const PieceRotate& a) const {
    return "rotate(P" + std::to_string(a.piece) + "," + std::to_string(a.degrees) + ")";
  }
  std::string operator()(const PieceTurn& a) const {
    return "rotate(P" + std::to_string(a.piece) + "," + (a.turn == Turn::cw ? "cw" : "ccw") + ")";
  }
  std::string operator()(const PiecePlace& a) const {
    return "place(P" + std::to_string(a.piece) + "," + std::to_string(a.row) + "," +
           std::to_string(a.col) + ")";
  }
  std::string operator()(const FragmentRotate& a) const {
    return "rotate(" + std::to_string(a.fragment) + "," + std::to_string(a.degrees) + ")";
  }
  std::string operator()(const FragmentPlace& a) const {
    return "place(" + std::to_string(a.fragment) + "," + std::string(1, a.slot) + ")";
  }
  std::string operator()(const Spin& a) const { return "rotate(" + signed_deg(a.degrees) + ")"; }
  std::string operator()(const AxisSpin& a) const {
    return "rotate(" + std::string(1, axis_char(a.axis)) + "," + signed_deg(a.degrees) + ")";
  }
  std::string operator()(const Swap& a) const {
    return "swap(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
  }
  std::string operator()(const Identify& a) const { return "identify(" + a.text + ")"; }
};

// Lexical form shared by every grammar: op[(arg{,arg})].
struct Arg {
  std::string_view text;
  std::size_t offset;
};
struct Token {
  std::string_view op;
  std::size_t op_offset = 0;
  bool has_parens = false;
  std::size_t paren_offset = 0;
  std::vector<Arg> args;
};

bool is_arg_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '_';
}

Result<Token> lex(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) return Error::parse("empty action", begin);

  Token token;
  token.op_offset = begin;
  std::size_t i = begin;
  while (i < end && ((text[i] >= 'a' && text[i] <= 'z') || text[i] == '_')) ++i;
  if (i == begin) return Error::parse("expected operator", begin);
  token.op = text.substr(begin, i - begin);
  if (i == end) return token;
  if (text[i] != '(') return Error::parse("unexpected character after operator", i);
  token.has_parens = true;
  token.paren_offset = i;
  ++i;
  while (true) {
    const std::size_t arg_begin = i;
    while (i < end && is_arg_char(text[i])) ++i;
    if (i == arg_begin) return Error::parse("expected argument", i);
    token.args.push_back({text.substr(arg_begin, i - arg_begin), arg_begin});
    if (i >= end) return Error::parse("unclosed argument list", i);
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == ')') {
      ++i;
      break;
    }
    return Error::parse("unexpected character in argument list", i);
  }
  if (i != end) return Error::parse("trailing characters after action", i);
  return token;
}

std::optional<int> parse_uint(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  if (s.size() > 1 && s[0] == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<int> parse_piece_id(std::string_view s) {
  if (s.size() < 2 || s[0] != 'P') return std::nullopt;
  return parse_uint(s.substr(1));
}

std::optional<Dir> parse_dir(std::string_view s) {
  for (Dir d : kDirs) {
    if (dir_name(d) == s) return d;
  }
  return std::nullopt;
}

std::optional<int> parse_pm15(std::string_view s) {
  if (s == "+15") return 15;
  if (s == "-15") return -15;
  return std::nullopt;
}

Error arity_error(const Token& t, std::size_t expected) {
  if (!t.has_parens) return Error::parse("missing argument list", t.op_offset + t.op.size());
  if (t.args.size() < expected) return Error::parse("too few arguments", t.paren_offset);
  return Error::parse("too many arguments", t.args[expected].offset);
}

Error unknown_op(const Token& t) { return Error::parse("unknown operator", t.op_offset); }

Error bad_arg(const Arg& a, const char* what) { return Error::parse(what, a.offset); }

Result<Action> parse_move(const Token& t) {
  auto dir = parse_dir(t.op);
  if (!dir) return unknown_op(t);
  if (t.has_parens) return Error::parse("move takes no arguments", t.paren_offset);
  return Action{Move{*dir}};
}

Result<Action> parse_rush_hour(const Token& t) {
  if (t.op != "slide") return unknown_op(t);
  if (t.args.size() != 3) return arity_error(t, 3);
  const auto& v = t.args[0].text;
  if (v.size() != 1 || v[0] < 'A' || v[0] > 'Z') return bad_arg(t.args[0], "expected vehicle letter");
  auto dir = parse_dir(t.args[1].text);
  if (!dir) return bad_arg(t.args[1], "expected direction");
  auto n = parse_uint(t.args[2].text);
  if (!n || *n < 1) return bad_arg(t.args[2], "expected positive distance");
  return Action{Slide{v[0], *dir, *n}};
}

Result<Action> parse_tangram(const Token& t) {
  if (t.op == "rotate") {
    if (t.args.size() != 2) return arity_error(t, 2);
    auto piece = parse_piece_id(t.args[0].text);
    if (!piece) return bad_arg(t.args[0], "expected piece id");
    auto deg = parse_uint(t.args[1].text);
    if (!deg) return bad_arg(t.args[1], "expected degrees");
    return Action{PieceRotate{*piece, *deg}};
  }
  if (t.op == "place") {
    if (t.args.size() != 3) return arity_error(t, 3);
    auto piece = parse_piece_id(t.args[0].text);
    if (!piece) return bad_arg(t.args[0], "expected piece id");
    auto row = parse_uint(t.args[1].text);
    if (!row) return bad_arg(t.args[1], "expected row");
    auto col = parse_uint(t.args[2].text);
    if (!col) return bad_arg(t.args[2], "expected column");
    return Action{PiecePlace{*piece, *row, *col}};
  }
  return unknown_op(t);
}

Result<Action> parse_jigsaw(const Token& t) {
  if (t.op == "rotate") {
    if (t.args.size() != 2) return arity_error(t, 2);
    auto piece = parse_piece_id(t.args[0].text);
    if (!piece) return bad_arg(t.args[0], "expected piece id");
    const auto& turn = t.args[1].text;
    if (turn == "cw") return Action{PieceTurn{*piece, Turn::cw}};
    if (turn == "ccw") return Action{PieceTurn{*piece, Turn::ccw}};
    return bad_arg(t.args[1], "expected cw or ccw");
  }
  if (t.op == "place") return parse_tangram(t);
  return unknown_op(t);
}

Result<Action> parse_char_recognition(const Token& t) {
  if (t.op == "rotate") {
    if (t.args.size() != 2) return arity_error(t, 2);
    auto k = parse_uint(t.args[0].text);
    if (!k) return bad_arg(t.args[0], "expected fragment index");
    auto deg = parse_uint(t.args[1].text);
    if (!deg) return bad_arg(t.args[1], "expected degrees");
    return Action{FragmentRotate{*k, *deg}};
  }
  if (t.op == "place") {
    if (t.args.size() != 2) return arity_error(t, 2);
    auto k = parse_uint(t.args[0].text);
    if (!k) return bad_arg(t.args[0], "expected fragment index");
    const auto& slot = t.args[1].text;
    if (slot.size() != 1 || slot[0] < 'A' || slot[0] > 'Z') {
      return bad_arg(t.args[1], "expected slot letter");
    }
    return Action{FragmentPlace{*k, slot[0]}};
  }
  if (t.op == "identify") {
    if (t.args.size() != 1) return arity_error(t, 1);
    const auto& c = t.args[0].text;
    const bool ok = c.size() == 1 && ((c[0] >= 'A' && c[0] <= 'Z') || (c[0] >= '0' && c[0] <= '9'));
    if (!ok) return bad_arg(t.args[0], "expected one character");
    return Action{Identify{std::string(c)}};
  }
  return unknown_op(t);
}

Result<Action> parse_rotation_2d(const Token& t) {
  if (t.op != "rotate") return unknown_op(t);
  if (t.args.size() != 1) return arity_error(t, 1);
  auto deg = parse_pm15(t.args[0].text);
  if (!deg) return bad_arg(t.args[0], "expected +15 or -15");
  return Action{Spin{*deg}};
}

Result<Action> parse_rotation_3d(const Token& t) {
  if (t.op != "rotate") return unknown_op(t);
  if (t.args.size() != 2) return arity_error(t, 2);
  const auto& a = t.args[0].text;
  Axis axis;
  if (a == "x") {
    axis = Axis::x;
  } else if (a == "y") {
    axis = Axis::y;
  } else if (a == "z") {
    axis = Axis::z;
  } else {
    return bad_arg(t.args[0], "expected axis x, y or z");
  }
  auto deg = parse_pm15(t.args[1].text);
  if (!deg) return bad_arg(t.args[1], "expected +15 or -15");
  return Action{AxisSpin{axis, *deg}};
}

Result<Action> parse_anagram(const Token& t) {
  if (t.op == "swap") {
    if (t.args.size() != 2) return arity_error(t, 2);
    auto i = parse_uint(t.args[0].text);
    if (!i) return bad_arg(t.args[0], "expected index");
    auto j = parse_uint(t.args[1].text);
    if (!j) return bad_arg(t.args[1], "expected index");
    return Action{Swap{*i, *j}};
  }
  if (t.op == "identify") {
    if (t.args.size() != 1) return arity_error(t, 1);
    const auto& w = t.args[0];
    for (std::size_t k = 0; k < w.text.size(); ++k) {
      if (w.text[k] < 'a' || w.text[k] > 'z') {
        return Error::parse("expected lowercase word", w.offset + k);
      }
    }
    return Action{Identify{std::string(w.text)}};
  }
  return unknown_op(t);
}

}  // namespace

std::string render_action(const Action& action) { return std::visit(RenderVisitor{}, action); }

Result<Action> parse_action(GameId game, std::string_view text) {
  auto lexed = lex(text);
  if (!lexed) return lexed.error();
  const Token& t = lexed.value();
  switch (game) {
    case GameId::sokoban:
    case GameId::bloxorz: return parse_move(t);
    case GameId::rush_hour: return parse_rush_hour(t);
    case GameId::tangram:
    case GameId::tangram_certificate: return parse_tangram(t);
    case GameId::jigsaw: return parse_jigsaw(t);
    case GameId::char_recognition: return parse_char_recognition(t);
    case GameId::shape_match_2d:
    case GameId::mental_rotation_2d: return parse_rotation_2d(t);
    case GameId::shape_match_3d:
    case GameId::mental_rotation_3d: return parse_rotation_3d(t);
    case GameId::anagram: return parse_anagram(t);
  }
  return unknown_op(t);
}

}  // namespace puzzles
