#include "loopnet/io.hpp"

#include <charconv>
#include <fstream>
#include <set>

namespace loopnet {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line.number) + ": " + msg, line.number);
}

int to_int(const Line& line, const std::string& tok) {
  int v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

void expect_count(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    fail(line, "expected " + std::to_string(count) + " fields, got " + std::to_string(line.tokens.size()));
}

const Line& header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw Error(Errc::ParseError, "empty file, expected '" + keyword + "' header");
  if (lines[0].tokens[0] != keyword) fail(lines[0], "expected '" + keyword + "' header");
  return lines[0];
}

Field parse_field_token(const Line& line, const std::string& tok) {
  if (tok == "Q") return Field{0};
  if (tok.size() > 4 && tok.rfind("GF(", 0) == 0 && tok.back() == ')') {
    const int p = to_int(line, tok.substr(3, tok.size() - 4));
    if (!is_prime(p)) fail(line, "GF modulus is not prime");
    return Field{static_cast<std::uint32_t>(p)};
  }
  fail(line, "unknown field '" + tok + "'");
}

template <typename Scalar>
ProjPoint<Scalar> parse_point(const Line& line, std::size_t first, const Field& field) {
  using T = FieldTraits<Scalar>;
  try {
    return ProjPoint<Scalar>(T::parse(line.tokens[first], field), T::parse(line.tokens[first + 1], field),
                             T::parse(line.tokens[first + 2], field));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

template <typename Scalar>
DualNet<Scalar> parse_net_body(const std::vector<Line>& lines, const Field& field, int n) {
  DualNet<Scalar> net;
  net.field = field;
  net.n = n;
  std::array<bool, 3> seen{};
  std::size_t i = 1;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.tokens[0] != "component") fail(head, "expected 'component <i>'");
    expect_count(head, 2);
    const int c = to_int(head, head.tokens[1]) - 1;
    if (c < 0 || c > 2) fail(head, "component index must be 1, 2 or 3");
    if (seen[c]) fail(head, "component listed twice");
    seen[c] = true;
    std::vector<std::optional<ProjPoint<Scalar>>> slots(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      if (++i >= lines.size()) throw Error(Errc::ParseError, "component " + std::to_string(c + 1) + " is short");
      const Line& row = lines[i];
      expect_count(row, 4);
      const int label = to_int(row, row.tokens[0]);
      if (label < 0 || label >= n) fail(row, "label out of range");
      if (slots[label]) fail(row, "label repeated");
      slots[label] = parse_point<Scalar>(row, 1, field);
    }
    for (auto& s : slots) net.comps[c].push_back(*s);
    ++i;
  }
  if (!(seen[0] && seen[1] && seen[2])) throw Error(Errc::ParseError, "net file needs components 1, 2 and 3");
  return net;
}

}  // namespace

LoopTable parse_loop(std::istream& in) {
  const auto lines = content_lines(in);
  const Line& head = header(lines, "loop");
  expect_count(head, 2);
  const int n = to_int(head, head.tokens[1]);
  if (n < 1) fail(head, "order must be positive");
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw Error(Errc::ParseError, "expected " + std::to_string(n) + " table rows");
  std::vector<std::vector<int>> raw;
  for (int r = 0; r < n; ++r) {
    const Line& row = lines[static_cast<std::size_t>(r) + 1];
    expect_count(row, static_cast<std::size_t>(n));
    std::vector<int> vals;
    for (const auto& tok : row.tokens) vals.push_back(to_int(row, tok));
    raw.push_back(std::move(vals));
  }
  return validate_table(raw);
}

std::string format_loop(const LoopTable& loop) {
  std::ostringstream os;
  if (!loop.name().empty()) os << "# " << loop.name() << '\n';
  os << "loop " << loop.order() << '\n';
  for (int a = 0; a < loop.order(); ++a) {
    for (int b = 0; b < loop.order(); ++b) os << (b ? " " : "") << loop(a, b);
    os << '\n';
  }
  return os.str();
}

TripleSystem parse_sts(std::istream& in) {
  const auto lines = content_lines(in);
  const Line& head = header(lines, "sts");
  expect_count(head, 3);
  TripleSystem sts;
  sts.point_count = to_int(head, head.tokens[1]);
  const int blocks = to_int(head, head.tokens[2]);
  if (lines.size() != static_cast<std::size_t>(blocks) + 1)
    throw Error(Errc::ParseError, "expected " + std::to_string(blocks) + " blocks");
  for (int b = 0; b < blocks; ++b) {
    const Line& row = lines[static_cast<std::size_t>(b) + 1];
    expect_count(row, 3);
    sts.blocks.push_back({to_int(row, row.tokens[0]), to_int(row, row.tokens[1]), to_int(row, row.tokens[2])});
  }
  validate_sts(sts);
  return sts;
}

std::string format_sts(const TripleSystem& sts) {
  std::ostringstream os;
  os << "sts " << sts.point_count << ' ' << sts.blocks.size() << '\n';
  for (const auto& b : sts.blocks) os << b[0] << ' ' << b[1] << ' ' << b[2] << '\n';
  return os.str();
}

AnyPoints parse_points(std::istream& in) {
  const auto lines = content_lines(in);
  const Line& head = header(lines, "field");
  Field field;
  if (head.tokens.size() == 2 && head.tokens[1] == "Q") {
    field = Field{0};
  } else if (head.tokens.size() == 3 && head.tokens[1] == "p") {
    const int p = to_int(head, head.tokens[2]);
    if (!is_prime(p)) fail(head, "modulus is not prime");
    field = Field{static_cast<std::uint32_t>(p)};
  } else {
    fail(head, "expected 'field p <prime>' or 'field Q'");
  }
  auto read = [&](auto tag) {
    using Scalar = decltype(tag);
    std::vector<ProjPoint<Scalar>> pts;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      expect_count(lines[i], 3);
      pts.push_back(parse_point<Scalar>(lines[i], 0, field));
    }
    return pts;
  };
  if (field.rational()) return read(Rational{});
  return read(Fp{});
}

AnyNet parse_net(std::istream& in) {
  const auto lines = content_lines(in);
  const Line& head = header(lines, "net");
  expect_count(head, 3);
  const Field field = parse_field_token(head, head.tokens[1]);
  const int n = to_int(head, head.tokens[2]);
  if (n < 1) fail(head, "order must be positive");
  if (field.rational()) return parse_net_body<Rational>(lines, field, n);
  return parse_net_body<Fp>(lines, field, n);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << text;
}

}  // namespace loopnet
