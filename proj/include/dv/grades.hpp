#ifndef DV_GRADES_HPP_
#define DV_GRADES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dv {

// Ordered set of grades a ballot may use.  Binary admits {0,1}, Discrete(N)
// admits {k/N : 0 <= k <= N}, Continuous admits all of [0,1].
class GradeScale {
public:
    enum class Kind { Binary, Discrete, Continuous };

    static GradeScale binary();
    static GradeScale discrete(int levels);
    static GradeScale continuous();

    Kind kind() const { return kind_; }
    int levels() const { return levels_; }
    bool admits(double g) const;
    std::string name() const;

    bool operator==(const GradeScale& o) const {
        return kind_ == o.kind_ && levels_ == o.levels_;
    }

private:
    GradeScale(Kind k, int levels) : kind_(k), levels_(levels) {}
    Kind kind_;
    int levels_;  // N for Discrete; unused otherwise
};

// One voter's grades, one entry per candidate.
using Profile = std::vector<double>;

// Grades of an electorate: rows are candidates, columns are voters.
// Construction does not range-check entries; validate() reports violations.
// Depth evaluators accept arbitrary real entries, which keeps the matrix
// usable for affine-invariance checks that leave [0,1].
class GradingMatrix {
public:
    GradingMatrix() = default;
    GradingMatrix(std::size_t candidates, std::size_t voters,
                  GradeScale scale = GradeScale::continuous());

    static GradingMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                   GradeScale scale = GradeScale::continuous(),
                                   std::vector<std::string> candidate_labels = {},
                                   std::vector<std::string> voter_labels = {});

    std::size_t candidates() const { return d_; }
    std::size_t voters() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    std::vector<double> row(std::size_t i) const;
    Profile voter_profile(std::size_t j) const;

    const GradeScale& scale() const { return scale_; }
    void set_scale(GradeScale s) { scale_ = s; }

    const std::vector<std::string>& candidate_labels() const { return candidate_labels_; }
    const std::vector<std::string>& voter_labels() const { return voter_labels_; }
    void set_candidate_labels(std::vector<std::string> labels);
    void set_voter_labels(std::vector<std::string> labels);

    GradingMatrix without_voter(std::size_t j) const;
    GradingMatrix permuted_candidates(const std::vector<std::size_t>& perm) const;
    GradingMatrix permuted_voters(const std::vector<std::size_t>& perm) const;

    // Column-wise concatenation of two electorates over the same candidates.
    static GradingMatrix concat_voters(const GradingMatrix& a, const GradingMatrix& b);

private:
    std::size_t d_ = 0;
    std::size_t n_ = 0;
    GradeScale scale_ = GradeScale::continuous();
    std::vector<double> data_;  // row-major, d_ x n_
    std::vector<std::string> candidate_labels_;
    std::vector<std::string> voter_labels_;
};

enum class ParseErrorCode { EmptyInput, RaggedRows, NonNumericCell, GradeOutOfRange };

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, std::size_t row, std::size_t column,
               const std::string& what);
    ParseErrorCode code() const { return code_; }
    std::size_t row() const { return row_; }        // 1-based line number
    std::size_t column() const { return column_; }  // 1-based cell index

private:
    ParseErrorCode code_;
    std::size_t row_;
    std::size_t column_;
};

// CSV ballots: a header row of candidate labels (optionally preceded by a
// literal "voter" cell naming a leading label column), then one row per voter.
GradingMatrix parse_ballots(const std::string& csv_text,
                            GradeScale scale = GradeScale::continuous());

// Inverse of parse_ballots; voters as rows, reals at 17 significant digits.
std::string serialize_ballots(const GradingMatrix& m);

// Projects every grade onto the target scale.  Discrete(N) floors to the
// grid (k = floor(g*N), entry becomes k/N).  Binary marks each voter's
// top-graded candidates 1 and the rest 0; ties all map to 1.
GradingMatrix quantize(const GradingMatrix& m, const GradeScale& target);

struct Violation {
    enum class Kind { EmptyMatrix, GradeOutOfRange, ScaleMismatch };
    Kind kind;
    long candidate;  // -1 when not cell-specific
    long voter;
    double value;
    std::string message;
};

std::vector<Violation> validate(const GradingMatrix& m);

}  // namespace dv

#endif  // DV_GRADES_HPP_
