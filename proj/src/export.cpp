#include "csp/export.hpp"

#include <algorithm>
#include <vector>

namespace csp {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string interfaceNote(const System& g, std::size_t component) {
    std::string note;
    for (std::size_t i = 0; i < g.phi().size(); ++i) {
        if (g.phi()[i] == component) {
            note += (note.empty() ? "" : ", ") + std::string("top ") + std::to_string(i + 1);
        }
    }
    for (std::size_t j = 0; j < g.psi().size(); ++j) {
        if (g.psi()[j] == component) {
            note += (note.empty() ? "" : ", ") + std::string("bottom ") + std::to_string(j + 1);
        }
    }
    return note;
}

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

} // namespace

std::string toDot(const System& g, const std::string& graphName,
                  std::optional<std::pair<std::size_t, std::size_t>> labels) {
    std::string out = "digraph " + quoted(graphName) + " {\n";
    out += "  node [shape=box];\n";
    for (std::size_t i = 0; i < g.states().size(); ++i) {
        out += "  u" + std::to_string(i + 1) + " [label=" + quoted(g.states()[i].str());
        if (std::string note = interfaceNote(g, i); !note.empty()) {
            out += ", xlabel=" + quoted(note);
        }
        out += "];\n";
    }
    for (const auto& [key, span] : g.spans()) {
        if (span.isEmpty() || (labels && (key.left != labels->first || key.right != labels->second))) {
            continue;
        }
        out += "  u" + std::to_string(key.from + 1) + " -> u" + std::to_string(key.to + 1) + " [label=" +
               quoted(span.name() + " (" + g.left()[key.left] + "," + g.right()[key.right] + ")") + "];\n";
    }
    return out + "}\n";
}

std::string matrixTable(const System& g, const std::string& title, std::size_t a, std::size_t b) {
    const SpanMatrix m = extendedMatrix(g, a, b);
    const std::size_t k = g.top().size();
    const std::size_t l = g.bottom().size();
    const std::size_t nc = m.cols().size();
    const std::size_t nr = m.rows().size();

    std::vector<std::vector<std::string>> cells(nr + 1, std::vector<std::string>(nc + 1));
    cells[0][0] = title;
    for (std::size_t j = 0; j < nc; ++j) {
        cells[0][j + 1] = m.cols()[j].str();
    }
    for (std::size_t i = 0; i < nr; ++i) {
        cells[i + 1][0] = m.rows()[i].str();
        for (std::size_t j = 0; j < nc; ++j) {
            cells[i + 1][j + 1] = m.at(i, j).name();
        }
    }
    std::vector<std::size_t> width(nc + 1, 0);
    for (const auto& row : cells) {
        for (std::size_t j = 0; j <= nc; ++j) {
            width[j] = std::max(width[j], row[j].size());
        }
    }

    auto line = [&](const std::vector<std::string>& row) {
        std::string s = pad(row[0], width[0]) + " ||";
        for (std::size_t j = 0; j < nc; ++j) {
            s += " " + pad(row[j + 1], width[j + 1]);
            if (j + 1 == k && k < nc) {
                s += " |";
            }
        }
        while (!s.empty() && s.back() == ' ') {
            s.pop_back();
        }
        return s + "\n";
    };
    auto rule = [&](char fill, const char* cross) {
        std::string s = std::string(width[0] + 1, fill) + cross;
        for (std::size_t j = 0; j < nc; ++j) {
            s += std::string(width[j + 1] + 1, fill);
            if (j + 1 == k && k < nc) {
                s += std::string(1, fill) + "+";
            }
        }
        return s + "\n";
    };

    std::string out = line(cells[0]) + rule('=', "++");
    for (std::size_t i = 0; i < nr; ++i) {
        if (i == l && l > 0) {
            out += rule('-', "++");
        }
        out += line(cells[i + 1]);
    }
    return out;
}

} // namespace csp
