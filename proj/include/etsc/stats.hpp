#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "etsc/time_series.hpp"

namespace etsc {

/// Population mean and standard deviation, skipping missing values.
std::pair<double, double> mean_and_std(std::span<const double> values);

enum class Category { Wide, Large, Unstable, Imbalanced, Multiclass, Common };

inline constexpr Category kAllCategories[] = {Category::Wide,       Category::Large,
                                              Category::Unstable,   Category::Imbalanced,
                                              Category::Multiclass, Category::Common};

std::string to_string(Category c);

/// Grouping thresholds used to categorize datasets.
struct CategoryThresholds {
    std::size_t wide_length = 1300;
    std::size_t large_height = 1000;
    double unstable_std = 100.0;
    double imbalance_ratio = 1.0;
    std::size_t multiclass_classes = 2;
};

struct DatasetStats {
    std::size_t height = 0;       ///< number of instances
    std::size_t length = 0;       ///< longest series
    std::size_t num_variables = 0;
    std::size_t num_classes = 0;  ///< classes with at least one instance
    double imbalance_ratio = 1.0; ///< largest class size / smallest class size
    std::vector<double> std_dev;  ///< per variable, pooled over all instances
    double pooled_std_dev = 0.0;  ///< over every value of every variable
    std::vector<Category> categories;

    bool in(Category c) const;
};

/// Categories overlap; Common holds exactly when no other category does.
std::vector<Category> categorize(const DatasetStats& s, const CategoryThresholds& th = {});

DatasetStats dataset_stats(const Dataset& d, const CategoryThresholds& th = {});

}  // namespace etsc
