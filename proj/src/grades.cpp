#include "dv/grades.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace dv {

GradeScale GradeScale::binary() { return GradeScale(Kind::Binary, 1); }

GradeScale GradeScale::discrete(int levels) {
    if (levels < 2) throw std::invalid_argument("discrete scale needs at least 2 levels");
    return GradeScale(Kind::Discrete, levels);
}

GradeScale GradeScale::continuous() { return GradeScale(Kind::Continuous, 0); }

bool GradeScale::admits(double g) const {
    if (!(g >= 0.0 && g <= 1.0)) return false;
    switch (kind_) {
        case Kind::Binary:
            return g == 0.0 || g == 1.0;
        case Kind::Discrete: {
            // Exact membership: g must reconstruct as k/N for integer k.
            long long k = std::llround(g * levels_);
            return g == static_cast<double>(k) / levels_;
        }
        case Kind::Continuous:
            return true;
    }
    return false;
}

std::string GradeScale::name() const {
    switch (kind_) {
        case Kind::Binary: return "binary";
        case Kind::Discrete: return "discrete(" + std::to_string(levels_) + ")";
        case Kind::Continuous: return "continuous";
    }
    return "?";
}

namespace {

std::vector<std::string> default_labels(const char* stem, std::size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(stem + std::to_string(k + 1));
    return out;
}

}  // namespace

GradingMatrix::GradingMatrix(std::size_t candidates, std::size_t voters, GradeScale scale)
    : d_(candidates),
      n_(voters),
      scale_(scale),
      data_(candidates * voters, 0.0),
      candidate_labels_(default_labels("c", candidates)),
      voter_labels_(default_labels("v", voters)) {}

GradingMatrix GradingMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                       GradeScale scale,
                                       std::vector<std::string> candidate_labels,
                                       std::vector<std::string> voter_labels) {
    std::size_t d = rows.size();
    std::size_t n = d == 0 ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("rows of unequal length");
    GradingMatrix m(d, n, scale);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    if (!candidate_labels.empty()) m.set_candidate_labels(std::move(candidate_labels));
    if (!voter_labels.empty()) m.set_voter_labels(std::move(voter_labels));
    return m;
}

std::vector<double> GradingMatrix::row(std::size_t i) const {
    return std::vector<double>(data_.begin() + i * n_, data_.begin() + (i + 1) * n_);
}

Profile GradingMatrix::voter_profile(std::size_t j) const {
    Profile p(d_);
    for (std::size_t i = 0; i < d_; ++i) p[i] = (*this)(i, j);
    return p;
}

void GradingMatrix::set_candidate_labels(std::vector<std::string> labels) {
    if (labels.size() != d_) throw std::invalid_argument("candidate label count mismatch");
    candidate_labels_ = std::move(labels);
}

void GradingMatrix::set_voter_labels(std::vector<std::string> labels) {
    if (labels.size() != n_) throw std::invalid_argument("voter label count mismatch");
    voter_labels_ = std::move(labels);
}

GradingMatrix GradingMatrix::without_voter(std::size_t j) const {
    if (j >= n_) throw std::out_of_range("voter index out of range");
    GradingMatrix m(d_, n_ - 1, scale_);
    m.candidate_labels_ = candidate_labels_;
    m.voter_labels_.clear();
    for (std::size_t k = 0; k < n_; ++k)
        if (k != j) m.voter_labels_.push_back(voter_labels_[k]);
    for (std::size_t i = 0; i < d_; ++i) {
        std::size_t col = 0;
        for (std::size_t k = 0; k < n_; ++k) {
            if (k == j) continue;
            m(i, col++) = (*this)(i, k);
        }
    }
    return m;
}

GradingMatrix GradingMatrix::permuted_candidates(const std::vector<std::size_t>& perm) const {
    if (perm.size() != d_) throw std::invalid_argument("permutation size mismatch");
    GradingMatrix m(d_, n_, scale_);
    m.voter_labels_ = voter_labels_;
    for (std::size_t i = 0; i < d_; ++i) {
        m.candidate_labels_[i] = candidate_labels_[perm[i]];
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(perm[i], j);
    }
    return m;
}

GradingMatrix GradingMatrix::permuted_voters(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
    GradingMatrix m(d_, n_, scale_);
    m.candidate_labels_ = candidate_labels_;
    for (std::size_t j = 0; j < n_; ++j) {
        m.voter_labels_[j] = voter_labels_[perm[j]];
        for (std::size_t i = 0; i < d_; ++i) m(i, j) = (*this)(i, perm[j]);
    }
    return m;
}

GradingMatrix GradingMatrix::concat_voters(const GradingMatrix& a, const GradingMatrix& b) {
    if (a.candidates() != b.candidates() || a.candidate_labels() != b.candidate_labels())
        throw std::invalid_argument("electorates grade different candidates");
    GradingMatrix m(a.candidates(), a.voters() + b.voters(), a.scale());
    m.candidate_labels_ = a.candidate_labels_;
    for (std::size_t j = 0; j < a.voters(); ++j) m.voter_labels_[j] = a.voter_labels_[j];
    for (std::size_t j = 0; j < b.voters(); ++j)
        m.voter_labels_[a.voters() + j] = b.voter_labels_[j];
    for (std::size_t i = 0; i < a.candidates(); ++i) {
        for (std::size_t j = 0; j < a.voters(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.voters(); ++j) m(i, a.voters() + j) = b(i, j);
    }
    return m;
}

ParseError::ParseError(ParseErrorCode code, std::size_t row, std::size_t column,
                       const std::string& what)
    : std::runtime_error(what), code_(code), row_(row), column_(column) {}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(trim(cur));
    return cells;
}

std::string format_grade(double g) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", g);
    return buf;
}

}  // namespace

GradingMatrix parse_ballots(const std::string& csv_text, GradeScale scale) {
    std::vector<std::string> lines;
    {
        std::istringstream in(csv_text);
        std::string line;
        while (std::getline(in, line)) {
            if (trim(line).empty()) continue;
            lines.push_back(line);
        }
    }
    if (lines.empty())
        throw ParseError(ParseErrorCode::EmptyInput, 0, 0, "empty ballot input");

    std::vector<std::string> header = split_csv_line(lines[0]);
    bool has_voter_column = !header.empty() && header[0] == "voter";
    std::size_t first_grade_cell = has_voter_column ? 1 : 0;
    if (header.size() <= first_grade_cell)
        throw ParseError(ParseErrorCode::EmptyInput, 1, 1, "header lists no candidates");

    std::vector<std::string> candidate_labels(header.begin() + first_grade_cell, header.end());
    std::size_t d = candidate_labels.size();

    if (lines.size() == 1)
        throw ParseError(ParseErrorCode::EmptyInput, 1, 1, "no ballot rows");

    std::size_t n = lines.size() - 1;
    GradingMatrix m(d, n, scale);
    m.set_candidate_labels(candidate_labels);
    std::vector<std::string> voter_labels(n);

    for (std::size_t j = 0; j < n; ++j) {
        std::size_t lineno = j + 2;
        std::vector<std::string> cells = split_csv_line(lines[j + 1]);
        if (cells.size() != header.size())
            throw ParseError(ParseErrorCode::RaggedRows, lineno, cells.size(),
                             "row " + std::to_string(lineno) + " has " +
                                 std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(header.size()));
        voter_labels[j] = has_voter_column ? cells[0] : "v" + std::to_string(j + 1);
        for (std::size_t i = 0; i < d; ++i) {
            const std::string& cell = cells[first_grade_cell + i];
            const char* begin = cell.c_str();
            char* end = nullptr;
            double g = std::strtod(begin, &end);
            if (cell.empty() || end != begin + cell.size())
                throw ParseError(ParseErrorCode::NonNumericCell, lineno,
                                 first_grade_cell + i + 1,
                                 "cell '" + cell + "' is not a number");
            if (!(g >= 0.0 && g <= 1.0))
                throw ParseError(ParseErrorCode::GradeOutOfRange, lineno,
                                 first_grade_cell + i + 1,
                                 "grade " + cell + " outside [0,1]");
            m(i, j) = g;
        }
    }
    m.set_voter_labels(voter_labels);
    return m;
}

std::string serialize_ballots(const GradingMatrix& m) {
    std::string out = "voter";
    for (const auto& c : m.candidate_labels()) {
        out += ',';
        out += c;
    }
    out += '\n';
    for (std::size_t j = 0; j < m.voters(); ++j) {
        out += m.voter_labels()[j];
        for (std::size_t i = 0; i < m.candidates(); ++i) {
            out += ',';
            out += format_grade(m(i, j));
        }
        out += '\n';
    }
    return out;
}

GradingMatrix quantize(const GradingMatrix& m, const GradeScale& target) {
    if (target.kind() == GradeScale::Kind::Continuous)
        throw std::invalid_argument("quantize target must be a finite scale");
    GradingMatrix out = m;
    out.set_scale(target);
    if (target.kind() == GradeScale::Kind::Discrete) {
        int levels = target.levels();
        for (std::size_t i = 0; i < m.candidates(); ++i)
            for (std::size_t j = 0; j < m.voters(); ++j) {
                // The slack keeps grid points fixed (idempotence) despite the
                // rounding in g*levels.
                double k = std::floor(m(i, j) * levels + 1e-9);
                k = std::min(std::max(k, 0.0), static_cast<double>(levels));
                out(i, j) = k / levels;
            }
        return out;
    }
    // Binary: each voter approves exactly their top-graded candidates.
    for (std::size_t j = 0; j < m.voters(); ++j) {
        double best = m(0, j);
        for (std::size_t i = 1; i < m.candidates(); ++i) best = std::max(best, m(i, j));
        for (std::size_t i = 0; i < m.candidates(); ++i)
            out(i, j) = (m(i, j) == best) ? 1.0 : 0.0;
    }
    return out;
}

std::vector<Violation> validate(const GradingMatrix& m) {
    std::vector<Violation> out;
    if (m.candidates() == 0 || m.voters() == 0) {
        out.push_back({Violation::Kind::EmptyMatrix, -1, -1, 0.0,
                       "matrix needs at least one candidate and one voter"});
        return out;
    }
    for (std::size_t i = 0; i < m.candidates(); ++i)
        for (std::size_t j = 0; j < m.voters(); ++j) {
            double g = m(i, j);
            if (!(g >= 0.0 && g <= 1.0)) {
                out.push_back({Violation::Kind::GradeOutOfRange, static_cast<long>(i),
                               static_cast<long>(j), g, "grade outside [0,1]"});
            } else if (!m.scale().admits(g)) {
                out.push_back({Violation::Kind::ScaleMismatch, static_cast<long>(i),
                               static_cast<long>(j), g,
                               "grade not on scale " + m.scale().name()});
            }
        }
    return out;
}

}  // namespace dv
