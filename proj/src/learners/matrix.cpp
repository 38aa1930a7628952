#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "etsc/learners/matrix.hpp"
#include "etsc/learners/prob_classifier.hpp"

namespace etsc {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m;
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const double> values) {
    if (rows_ == 0 && data_.empty()) {
        cols_ = values.size();
    } else if (values.size() != cols_) {
        throw std::invalid_argument("row has " + std::to_string(values.size()) +
                                    " features, expected " + std::to_string(cols_));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

std::size_t argmax(std::span<const double> v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

void softmax_inplace(std::span<double> scores) {
    const double top = *std::max_element(scores.begin(), scores.end());
    double total = 0.0;
    for (double& s : scores) {
        s = std::exp(s - top);
        total += s;
    }
    for (double& s : scores) s /= total;
}

Label ProbClassifier::predict(std::span<const double> x) const {
    return static_cast<Label>(argmax(predict_proba(x)));
}

}  // namespace etsc
