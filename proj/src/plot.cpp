// Copyright 2026 discopile contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discopile/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "discopile/errors.hpp"

namespace discopile {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 620.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 360.0;

std::string fmt(const char* pattern, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

std::string polyline(const std::vector<double>& ys, double y_max,
                     const char* color) {
  std::string pts;
  std::size_t n = ys.size();
  double dx = (kRight - kLeft) / static_cast<double>(n > 1 ? n - 1 : 1);
  for (std::size_t i = 0; i < n; ++i) {
    double x = kLeft + dx * static_cast<double>(i);
    double frac = y_max > 0.0 ? ys[i] / y_max : 0.0;
    double y = kBottom - (kBottom - kTop) * frac;
    if (i) pts += ' ';
    pts += fmt("%.2f,%.2f", x, y);
  }
  return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
         "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
}

double parse_double(const std::string& field, int line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(field, &pos);
    if (pos != field.size())
      throw ParseError("trailing characters in number '" + field + "'",
                       line_no);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + field + "'", line_no);
  }
}

}  // namespace

void parse_loss_csv(const std::string& text, std::vector<double>& loss,
                    std::vector<double>& accuracy) {
  loss.clear();
  accuracy.clear();
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == "iter,loss,accuracy") continue;
    auto c1 = line.find(',');
    auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos)
      throw ParseError("expected iter,loss,accuracy", line_no);
    loss.push_back(parse_double(line.substr(c1 + 1, c2 - c1 - 1), line_no));
    accuracy.push_back(parse_double(line.substr(c2 + 1), line_no));
  }
}

std::string render_loss_svg(const std::vector<double>& loss,
                            const std::vector<double>& accuracy) {
  if (loss.empty() || loss.size() != accuracy.size())
    throw Error("loss curve is empty or lengths differ");

  double y_max = 1.0;
  for (double v : loss)
    if (std::isfinite(v)) y_max = std::max(y_max, v);

  std::string svg;
  svg += fmt(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
      "height=\"%.0f\" viewBox=\"0 0 640 400\">\n",
      kWidth, kHeight);
  svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" "
         "fill=\"white\"/>\n";
  svg += fmt("  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"60.00\" y2=\"360.00\" "
             "stroke=\"black\"/>\n",
             kLeft, kTop);
  svg += fmt("  <line x1=\"60.00\" y1=\"360.00\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"black\"/>\n",
             kRight, kBottom);

  // Five y ticks from 0 to y_max; five x ticks over the iteration range.
  for (int t = 0; t <= 4; ++t) {
    double frac = static_cast<double>(t) / 4.0;
    double y = kBottom - (kBottom - kTop) * frac;
    svg += fmt("  <line x1=\"55.00\" y1=\"%.2f\" x2=\"60.00\" y2=\"%.2f\" "
               "stroke=\"black\"/>\n",
               y, y);
    svg += fmt("  <text x=\"50.00\" y=\"%.2f\" font-size=\"11\" "
               "text-anchor=\"end\">%.2f</text>\n",
               y + 4.0, y_max * frac);
  }
  std::size_t n = loss.size();
  for (int t = 0; t <= 4; ++t) {
    std::size_t idx = n == 1 ? 0 : (n - 1) * t / 4;
    double dx = (kRight - kLeft) / static_cast<double>(n > 1 ? n - 1 : 1);
    double x = kLeft + dx * static_cast<double>(idx);
    svg += fmt("  <line x1=\"%.2f\" y1=\"360.00\" x2=\"%.2f\" y2=\"365.00\" "
               "stroke=\"black\"/>\n",
               x, x);
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "  <text x=\"%.2f\" y=\"380.00\" font-size=\"11\" "
                  "text-anchor=\"middle\">%zu</text>\n",
                  x, idx);
    svg += buf;
  }

  svg += polyline(loss, y_max, "#c0392b");
  svg += polyline(accuracy, y_max, "#2980b9");
  svg += "  <text x=\"480.00\" y=\"40.00\" font-size=\"12\" "
         "fill=\"#c0392b\">loss</text>\n";
  svg += "  <text x=\"480.00\" y=\"56.00\" font-size=\"12\" "
         "fill=\"#2980b9\">accuracy</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace discopile
