#include "multitile/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "multitile/arrangement.hpp"

namespace multitile {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kLegendWidth = 120.0;

const char* const kPalette[] = {"#ffffff", "#fde0c5", "#facba6", "#f8b58b", "#f59e72", "#f2855d",
                                "#ef6a4c", "#eb4a40", "#c93a3c", "#a02c3c", "#7a2236", "#54182c"};

const char* color_for(std::int64_t k) {
  constexpr std::int64_t n = sizeof(kPalette) / sizeof(kPalette[0]);
  if (k < 0) return "#7f7f7f";
  return kPalette[k < n ? k : n - 1];
}

double coordinate(const FieldElement& v) {
  RationalInterval iv = v.approx(30);
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

class Canvas {
 public:
  explicit Canvas(const Box& window)
      : x0_(coordinate(window.x0)), y1_(coordinate(window.y1)) {
    double w = coordinate(window.x1) - x0_;
    double h = y1_ - coordinate(window.y0);
    scale_ = kCanvas / std::max(w, h);
    width_ = w * scale_;
    height_ = h * scale_;
  }

  std::string points(const std::vector<PlaneVector>& vs) const {
    std::string out;
    for (const PlaneVector& p : vs) {
      if (!out.empty()) out += ' ';
      out += fmt((coordinate(p.x) - x0_) * scale_) + "," + fmt((y1_ - coordinate(p.y)) * scale_);
    }
    return out;
  }

  double width() const { return width_; }
  double height() const { return height_; }

 private:
  double x0_, y1_, scale_ = 1, width_ = 0, height_ = 0;
};

}  // namespace

Box default_render_window(const Polygon& polygon, const TranslateSet& lambda) {
  Box r = bounding_box(verification_region(polygon, lambda));
  if (!lambda.is_periodic()) return r;
  const Box& p = polygon.bounds();
  FieldElement pw = p.x1 - p.x0, ph = p.y1 - p.y0;
  return {r.x0 - pw, r.y0 - ph, r.x1 + pw, r.y1 + ph};
}

std::string render_svg(const Polygon& polygon, const TranslateSet& lambda, const Box& window) {
  if (!window.proper()) throw WindowError("render window is empty");
  std::vector<Polygon> translates = translates_meeting(polygon, lambda, window);
  Canvas canvas(window);

  std::ostringstream faces;
  std::map<std::int64_t, bool> seen;
  scan_faces(window.corners(), translates, true, [&](const Face& face) {
    seen[face.count] = true;
    faces << "<polygon points=\"" << canvas.points(face.outline) << "\" fill=\""
          << color_for(face.count) << "\" stroke=\"" << color_for(face.count)
          << "\" stroke-width=\"0.5\"/>\n";
    return true;
  });

  std::ostringstream svg;
  const double total_width = canvas.width() + kLegendWidth;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(total_width)
      << "\" height=\"" << fmt(canvas.height()) << "\" viewBox=\"0 0 " << fmt(total_width) << " "
      << fmt(canvas.height()) << "\">\n";
  svg << "<defs><clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"" << fmt(canvas.width())
      << "\" height=\"" << fmt(canvas.height()) << "\"/></clipPath></defs>\n";
  svg << "<g id=\"faces\">\n" << faces.str() << "</g>\n";
  svg << "<g id=\"translates\" clip-path=\"url(#window)\" fill=\"none\" stroke=\"#222222\" "
         "stroke-width=\"1\">\n";
  for (const Polygon& t : translates) {
    svg << "<polygon points=\"" << canvas.points(t.vertices()) << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n";
  double y = 20;
  for (const auto& [k, _] : seen) {
    svg << "<rect x=\"" << fmt(canvas.width() + 16) << "\" y=\"" << fmt(y - 12)
        << "\" width=\"16\" height=\"16\" fill=\"" << color_for(k)
        << "\" stroke=\"#222222\"/>\n";
    svg << "<text x=\"" << fmt(canvas.width() + 40) << "\" y=\"" << fmt(y + 2) << "\">k = " << k
        << "</text>\n";
    y += 24;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace multitile
