#include "etsc/learners/cross_validation.hpp"

#include <stdexcept>

namespace etsc {

Matrix cross_val_proba(const Matrix& x, std::span<const Label> y, std::size_t num_classes,
                       const ProbClassifierFactory& factory, const FoldPlan& plan) {
    if (plan.assignments.size() != x.rows()) {
        throw std::invalid_argument("fold plan does not match the data");
    }
    Matrix out(x.rows(), num_classes, 0.0);
    for (std::size_t f = 0; f < plan.k; ++f) {
        const auto test = plan.test_indices(f);
        if (test.empty()) continue;
        const auto train = plan.train_indices(f);
        Matrix xt;
        std::vector<Label> yt;
        for (std::size_t i : train) {
            xt.append_row(x.row(i));
            yt.push_back(y[i]);
        }
        const auto model = factory(xt, yt, num_classes);
        for (std::size_t i : test) {
            const auto p = model->predict_proba(x.row(i));
            std::copy(p.begin(), p.end(), out.row(i).begin());
        }
    }
    return out;
}

std::vector<double> flatten_prefix(const TimeSeries& s, std::size_t t) {
    if (t > s.length()) throw std::out_of_range("prefix longer than the series");
    std::vector<double> out;
    out.reserve(s.dims() * t);
    for (std::size_t d = 0; d < s.dims(); ++d) {
        const auto r = s.row(d);
        out.insert(out.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(t));
    }
    return out;
}

Matrix prefix_matrix(const Dataset& d, std::size_t t) {
    Matrix m;
    for (const auto& inst : d.instances) m.append_row(flatten_prefix(inst.series, t));
    return m;
}

}  // namespace etsc
