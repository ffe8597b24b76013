#include "hookpart/svg.hpp"

#include <sstream>

namespace hookpart {

namespace {

// world box: x in [-1.6, 3.6], y in [-2.6, 2.6], mapped into 800x800
constexpr double kViewPx = 800.0;
constexpr double kWorldHalfSpan = 2.6;
constexpr double kWorldCenterX = 1.0;

double px_x(double x) { return (x - kWorldCenterX + kWorldHalfSpan) / (2 * kWorldHalfSpan) * kViewPx; }
double px_y(double y) { return (kWorldHalfSpan - y) / (2 * kWorldHalfSpan) * kViewPx; }
double px_len(double v) { return v / (2 * kWorldHalfSpan) * kViewPx; }

void marker(std::ostringstream& svg, double x, double y, const std::string& label) {
    svg << "  <g stroke=\"#b03030\" stroke-width=\"2\">\n"
        << "    <line x1=\"" << px_x(x) - 6 << "\" y1=\"" << px_y(y) << "\" x2=\"" << px_x(x) + 6
        << "\" y2=\"" << px_y(y) << "\"/>\n"
        << "    <line x1=\"" << px_x(x) << "\" y1=\"" << px_y(y) - 6 << "\" x2=\"" << px_x(x)
        << "\" y2=\"" << px_y(y) + 6 << "\"/>\n"
        << "  </g>\n"
        << "  <text x=\"" << px_x(x) + 9 << "\" y=\"" << px_y(y) - 6
        << "\" font-size=\"14\" fill=\"#b03030\">" << label << "</text>\n";
}

} // namespace

std::string render_roots_svg(const std::vector<ZeroSet>& sets) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // axes
    svg << "  <g stroke=\"#c8c8c8\" stroke-width=\"1\">\n"
        << "    <line x1=\"0\" y1=\"" << px_y(0) << "\" x2=\"800\" y2=\"" << px_y(0) << "\"/>\n"
        << "    <line x1=\"" << px_x(0) << "\" y1=\"0\" x2=\"" << px_x(0) << "\" y2=\"800\"/>\n"
        << "  </g>\n";

    // reference circle |z-1| = 2
    svg << "  <circle cx=\"" << px_x(1.0) << "\" cy=\"" << px_y(0.0) << "\" r=\"" << px_len(2.0)
        << "\" fill=\"none\" stroke=\"#3050c0\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";

    // roots
    svg << "  <g fill=\"#202020\">\n";
    std::size_t total = 0;
    for (const auto& zs : sets) {
        for (const auto& z : zs.points) {
            svg << "    <circle cx=\"" << px_x(z.real()) << "\" cy=\"" << px_y(z.imag())
                << "\" r=\"2\"/>\n";
            ++total;
        }
    }
    svg << "  </g>\n";

    marker(svg, 1.0, 2.0, "1+2i");
    marker(svg, 1.0, -2.0, "1-2i");

    svg << "  <text x=\"16\" y=\"28\" font-size=\"16\" fill=\"#202020\">" << total
        << " zeros of the generating polynomials, reference circle |z-1| = 2</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace hookpart
