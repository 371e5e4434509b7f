#include "locus/scene.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <string_view>

namespace locus {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<double> parse_numbers(std::string_view s, std::size_t line_no) {
  std::vector<double> out;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || !std::isfinite(v))
      throw InvalidScene("line " + std::to_string(line_no) + ": expected a finite number");
    s.remove_prefix(static_cast<std::size_t>(res.ptr - s.data()));
    if (!s.empty() && s.front() != ' ' && s.front() != '\t')
      throw InvalidScene("line " + std::to_string(line_no) + ": malformed number");
    out.push_back(v);
  }
  return out;
}

std::vector<double> expect(std::string_view value, std::size_t count, std::size_t line_no) {
  auto nums = parse_numbers(value, line_no);
  if (nums.size() != count)
    throw InvalidScene("line " + std::to_string(line_no) + ": expected " + std::to_string(count) + " number(s)");
  return nums;
}

}  // namespace

SceneFile parse_scene(std::istream& in) {
  SceneFile scene;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InvalidScene("line " + std::to_string(line_no) + ": missing '='");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    if (key == "vertex") {
      const auto v = expect(value, 2, line_no);
      scene.vertices.push_back({v[0], v[1]});
    } else if (key == "leg_sum") {
      scene.leg_sum = expect(value, 1, line_no)[0];
    } else if (key == "squares_sum") {
      scene.squares_sum = expect(value, 1, line_no)[0];
    } else if (key == "ellipse") {
      const auto v = expect(value, 2, line_no);
      scene.ellipse = EllipseCanonical{v[0], v[1]};
    } else if (key == "size") {
      const double v = expect(value, 1, line_no)[0];
      if (v < 16 || v > 16384 || v != std::floor(v))
        throw InvalidScene("line " + std::to_string(line_no) + ": size must be an integer in [16, 16384]");
      scene.render.size = static_cast<int>(v);
    } else if (key == "margin") {
      const double v = expect(value, 1, line_no)[0];
      if (v < 0.0 || v > 1.0) throw InvalidScene("line " + std::to_string(line_no) + ": margin must be in [0, 1]");
      scene.render.margin = v;
    } else if (key == "decorate") {
      if (value == "true" || value == "1")
        scene.render.decorate = true;
      else if (value == "false" || value == "0")
        scene.render.decorate = false;
      else
        throw InvalidScene("line " + std::to_string(line_no) + ": decorate must be true or false");
    } else {
      throw InvalidScene("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  return scene;
}

}  // namespace locus
