#include "sl3/render.hpp"
#include "sl3/morse.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <set>

namespace sl3 {
namespace {

std::set<std::string> highlighted(const std::string& svg) {
  std::set<std::string> out;
  const std::regex re("class=\"flat\"[^>]*data-edge=\"([^\"]+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.insert((*it)[1]);
  }
  return out;
}

TEST(Render, FlatEdgesHighlighted) {
  for (int m : {3, 9, 14}) {
    const std::string svg = render_sector(Window{m});
    std::set<std::string> expected;
    for (const Cell& c : flat_edges(Window{m})) expected.insert(c.nodes[0].lo.to_string() + "-" + c.nodes[1].lo.to_string());
    EXPECT_EQ(highlighted(svg), expected) << m;
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
  }
}

TEST(Render, Stable) { EXPECT_EQ(render_sector(Window{9}), render_sector(Window{9})); }

TEST(Render, EmptyWindow) {
  const std::string svg = render_sector(Window{-1});
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(svg.find("<line"), std::string::npos);
}

TEST(Render, UnwritablePathThrows) {
  EXPECT_THROW(write_text_file("/nonexistent-dir/x.svg", "x"), std::runtime_error);
}

}  // namespace
}  // namespace sl3
