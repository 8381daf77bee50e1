#include "kostantq/recurrences.hpp"

#include <stdexcept>

#include "kostantq/errors.hpp"

namespace kostantq {
namespace recurrences {

namespace {

const QPolynomial kQ{0, 1};
const QPolynomial kOnePlusQSquared{1, 2, 1};  // (1+q)^2
const QPolynomial kQCubed{0, 0, 0, 1};
const QPolynomial kQSquared{0, 0, 1};
const QPolynomial kQQ2Q3{0, 1, 1, 1};  // q + q^2 + q^3
const QPolynomial kTwoQPlusTwo{2, 2};

}  // namespace

QPolynomial type_a_count(int rank) {
    LieType{Family::A, rank}.validate();
    return kQ * QPolynomial{1, 1}.pow(static_cast<unsigned>(rank - 1));
}

RecurrenceTable::RecurrenceTable(Family family) : family_(family) {}

// Fills the split tables and their prefix sums; the full values are summed
// on demand by ensure() so the same machinery can back both B and D.
void RecurrenceTable::grow_b(int rank) {
    if (nh_values_.empty()) {
        nh_values_ = {QPolynomial(), kQ};
        h_values_ = {QPolynomial(), QPolynomial()};
        nh_prefix_ = {QPolynomial(), kQ};
        nh_prefix2_ = {QPolynomial(), kQ};
    }
    for (int r = static_cast<int>(nh_values_.size()); r <= rank; ++r) {
        QPolynomial nh = r == 2 ? QPolynomial{0, 0, 1, 1}
                                : kOnePlusQSquared * nh_values_[r - 1] - kQCubed * nh_prefix_[r - 2];
        QPolynomial h = r == 2 ? kQ
                               : kQ + (nh_prefix_[r - 1] - nh_prefix_[1]).scaled(2) -
                                     kQSquared * nh_prefix2_[r - 2];
        nh_prefix_.push_back(nh_prefix_.back() + nh);
        nh_prefix2_.push_back(nh_prefix2_.back() + nh_prefix_.back());
        nh_values_.push_back(std::move(nh));
        h_values_.push_back(std::move(h));
    }
}

void RecurrenceTable::grow_c(int rank) {
    if (values_.empty()) {
        values_ = {QPolynomial(), kQ};
        c_prefix_ = {QPolynomial(), kQ};
    }
    for (int r = static_cast<int>(values_.size()); r <= rank; ++r) {
        QPolynomial v = r == 2 ? kQQ2Q3
                               : kOnePlusQSquared * (values_[r - 1] - kQ) -
                                     kQCubed * c_prefix_[r - 2] + kQQ2Q3;
        c_prefix_.push_back(c_prefix_.back() + v);
        values_.push_back(std::move(v));
    }
}

void RecurrenceTable::grow_a(int rank) {
    if (values_.empty()) values_ = {QPolynomial()};
    for (int r = static_cast<int>(values_.size()); r <= rank; ++r)
        values_.push_back(type_a_count(r));
}

void RecurrenceTable::ensure(int rank) {
    LieType{family_, rank}.validate();
    switch (family_) {
        case Family::A: grow_a(rank); break;
        case Family::B:
            grow_b(rank);
            if (values_.empty()) values_ = {QPolynomial()};
            for (int r = static_cast<int>(values_.size()); r <= rank; ++r)
                values_.push_back(nh_values_[r] + h_values_[r]);
            break;
        case Family::C: grow_c(rank); break;
        case Family::D: {
            // Assemble from the type B split at rank - 2.
            grow_b(rank - 2);
            if (values_.empty()) values_.assign(4, QPolynomial());
            for (int r = static_cast<int>(values_.size()); r <= rank; ++r) {
                const int m = r - 2;
                QPolynomial extension =
                    nh_values_[m].scaled(2) - kQSquared * nh_prefix_[m - 1];
                values_.push_back(h_values_[m] + kQSquared * nh_values_[m] +
                                  kTwoQPlusTwo * extension);
            }
            break;
        }
    }
}

const QPolynomial& RecurrenceTable::at(int rank) {
    ensure(rank);
    return values_[static_cast<std::size_t>(rank)];
}

const QPolynomial& RecurrenceTable::nonhooked_at(int rank) {
    if (family_ != Family::B)
        throw std::invalid_argument("split counts are only defined for family B");
    ensure(rank);
    return nh_values_[static_cast<std::size_t>(rank)];
}

const QPolynomial& RecurrenceTable::hooked_at(int rank) {
    if (family_ != Family::B)
        throw std::invalid_argument("split counts are only defined for family B");
    ensure(rank);
    return h_values_[static_cast<std::size_t>(rank)];
}

QPolynomial count(const LieType& t) {
    RecurrenceTable table(t.family);
    return table.at(t.rank);
}

QPolynomial nonhooked_count_b(int rank) {
    RecurrenceTable table(Family::B);
    return table.nonhooked_at(rank);
}

QPolynomial hooked_count_b(int rank) {
    RecurrenceTable table(Family::B);
    return table.hooked_at(rank);
}

}  // namespace recurrences
}  // namespace kostantq
