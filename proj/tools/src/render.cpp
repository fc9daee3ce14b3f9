#include "exseq_tools/render.hpp"

#include <sstream>

#include "exseq/cohomology.hpp"

namespace exseq::tools {

namespace {

// lowest nonzero degree, -1 for immaculate, -2 for several degrees
int cell_degree(const VarietySpec& s, Bundle L) {
    std::uint64_t m = nonzero_degrees(s, L);
    if (m == 0) return -1;
    if ((m & (m - 1)) != 0) return -2;
    int d = 0;
    while (!((m >> d) & 1U)) ++d;
    return d;
}

char degree_char(int d) {
    if (d == -1) return '.';
    if (d == -2) return '*';
    return d < 10 ? char('0' + d) : char('a' + d - 10);
}

const char* palette[] = {"#f4a261", "#2a9d8f", "#e76f51", "#8ab17d", "#6d597a", "#e9c46a", "#457b9d", "#b56576"};

}  // namespace

json loci_json(const VarietySpec& s, int window) {
    json pts = json::array();
    for (int j = -window; j <= window; ++j)
        for (int i = -window; i <= window; ++i) {
            Bundle L{i, j};
            CohomologyVector h = h_dims(s, L);
            pts.push_back({{"L", json::array({i, j})}, {"h", h}, {"immaculate", is_immaculate(s, L)}});
        }
    return {{"spec", to_json(s)}, {"window", window}, {"canonical", to_json(canonical_bundle(s))}, {"points", pts}};
}

std::string loci_ascii(const VarietySpec& s, int window) {
    std::ostringstream os;
    Bundle k = canonical_bundle(s);
    os << s.name() << "  '.' immaculate, digit = cohomological degree, '*' several, O = O_X, K = K_X\n";
    for (int j = window; j >= -window; --j) {
        os.width(4);
        os << j << " ";
        for (int i = -window; i <= window; ++i) {
            Bundle L{i, j};
            char c = degree_char(cell_degree(s, L));
            if (L == Bundle{0, 0}) c = 'O';
            if (L == k) c = 'K';
            os << c;
        }
        os << "\n";
    }
    return os.str();
}

std::string loci_svg(const VarietySpec& s, int window) {
    const int cell = 14;
    int n = 2 * window + 1;
    int legend = 120;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * cell + legend << "\" height=\"" << n * cell << "\">\n";
    os << "<defs><pattern id=\"imm\" width=\"4\" height=\"4\" patternUnits=\"userSpaceOnUse\"><path d=\"M0,4 L4,0\" stroke=\"#555\" stroke-width=\"0.6\"/></pattern></defs>\n";
    Bundle k = canonical_bundle(s);
    for (int j = window; j >= -window; --j)
        for (int i = -window; i <= window; ++i) {
            int x = (i + window) * cell, y = (window - j) * cell;
            int d = cell_degree(s, {i, j});
            std::string fill = d == -1 ? "url(#imm)" : d == -2 ? "#999" : palette[d % 8];
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << fill
               << "\" stroke=\"#fff\" stroke-width=\"0.5\"/>\n";
            std::string mark;
            if (i == 0 && j == 0) mark = "O";
            if (Bundle{i, j} == k) mark = "K";
            if (!mark.empty())
                os << "<text x=\"" << x + 3 << "\" y=\"" << y + cell - 3 << "\" font-size=\"10\" font-family=\"monospace\">" << mark << "</text>\n";
        }
    int ly = 12;
    os << "<text x=\"" << n * cell + 8 << "\" y=\"" << ly << "\" font-size=\"11\">" << s.name() << "</text>\n";
    for (int d = 0; d <= dim_variety(s); ++d) {
        ly += 16;
        os << "<rect x=\"" << n * cell + 8 << "\" y=\"" << ly - 10 << "\" width=\"10\" height=\"10\" fill=\"" << palette[d % 8] << "\"/>";
        os << "<text x=\"" << n * cell + 22 << "\" y=\"" << ly << "\" font-size=\"11\">H^" << d << "</text>\n";
    }
    ly += 16;
    os << "<rect x=\"" << n * cell + 8 << "\" y=\"" << ly - 10 << "\" width=\"10\" height=\"10\" fill=\"url(#imm)\"/>";
    os << "<text x=\"" << n * cell + 22 << "\" y=\"" << ly << "\" font-size=\"11\">immaculate</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace exseq::tools
