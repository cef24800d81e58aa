#pragma once

#include <span>
#include <vector>

#include "json.hpp"

namespace floodcast {

// Binary regression tree stored as a flat node vector (root at 0).
// Boosted trees keep gradient/hessian sums in sum_a/sum_b; forest trees keep
// the target sum and squared sum. Leaves have feature == -1.
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;  // leaf output
    double gain = 0.0;   // split gain, internal nodes only
    int n_samples = 0;
    double sum_a = 0.0;
    double sum_b = 0.0;
};

struct RegressionTree {
    std::vector<TreeNode> nodes;

    double predict_row(std::span<const double> row) const {
        int i = 0;
        while (nodes[static_cast<std::size_t>(i)].feature >= 0) {
            const TreeNode& n = nodes[static_cast<std::size_t>(i)];
            i = row[static_cast<std::size_t>(n.feature)] < n.threshold ? n.left : n.right;
        }
        return nodes[static_cast<std::size_t>(i)].value;
    }

    int depth() const;
    int n_leaves() const;
};

// Nested-node JSON form used by both ensemble serializers.
nlohmann::json tree_to_json(const RegressionTree& tree);
RegressionTree tree_from_json(const nlohmann::json& j);

}  // namespace floodcast
