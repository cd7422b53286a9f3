#include "pcakit/dataset.hpp"

namespace pcakit {

// Height (in) / weight (lb) measurements for 30 young adults, from the SOCR
// public body-measurement collection. Column j is person j+1.
Dataset embedded_height_weight() {
    static const std::vector<double> entries = {
        // heights
        67.78, 73.52, 71.40, 70.22, 69.79, 70.70, 71.80, 72.01, 69.90, 68.78,
        68.49, 69.62, 70.30, 69.12, 70.28, 73.09, 68.46, 70.65, 73.23, 69.13,
        69.83, 70.88, 65.48, 70.42, 69.63, 69.21, 72.84, 69.49, 68.53, 67.44,
        // weights
        132.99, 176.49, 173.03, 162.34, 164.30, 143.30, 161.49, 166.46, 142.37, 150.67,
        147.45, 144.14, 155.61, 142.46, 146.09, 175.00, 149.50, 162.97, 177.90, 144.04,
        161.28, 163.54, 126.90, 149.50, 161.85, 149.72, 172.42, 151.55, 138.33, 133.89,
    };
    return Dataset{{"Height", "Weight"},
                   Matrix(2, 30, entries),
                   "embedded height/weight sample (n=30)"};
}

}  // namespace pcakit
