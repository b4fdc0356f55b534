#include "rigidroots/svg.hpp"
#include "rigidroots/words.hpp"

#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

using namespace rigid;

namespace {

std::string labels(const std::string& svg) {
  const auto begin = svg.find("<g id=\"crossings\">");
  const auto end = svg.find("</g>", begin);
  const std::string part = svg.substr(begin, end - begin);
  static const std::regex text(R"(<text[^>]*>([123])</text>)");
  std::string out;
  for (auto it = std::sregex_iterator(part.begin(), part.end(), text); it != std::sregex_iterator(); ++it)
    out += (*it)[1].str();
  return out;
}

}  // namespace

TEST_CASE("crossing labels read the crossing word") {
  for (const Root r : {Root{5, 3}, Root{1, 1}, Root{2, 1}, Root{3, 8}, Root{17, 7}})
    CHECK(labels(render_svg(3, r)) == crossing_word(r));
  CHECK(labels(render_svg(3, {5, 3})) == "2321232321232");
  const std::string one = render_svg(3, {1, 1});
  CHECK(one.find("class=\"d\"") != std::string::npos);
  CHECK(labels(one) == "2");
}

TEST_CASE("output is deterministic and well formed") {
  const std::string a = render_svg(4, {5, 3});
  CHECK(a == render_svg(4, {5, 3}));
  CHECK(a.starts_with("<svg"));
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("<g id=\"legend\">") != std::string::npos);
  CHECK_THROWS(render_svg(3, {4, 2}));
}

TEST_CASE("emit_svg") {
  const auto path = std::filesystem::temp_directory_path() / "rigidroots_test.svg";
  emit_svg(3, {5, 3}, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == render_svg(3, {5, 3}));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_svg(3, {5, 3}, "/nonexistent-dir/x/y.svg"), std::runtime_error);
}
