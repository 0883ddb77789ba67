#pragma once

#include <string>

#include "doctest.h"
#include "fseries/fixtures.hpp"

namespace fseries::testing {

template <class R>
void check_fixture(const std::string& id, const Series<R>& computed) {
    SeriesDiff d = diff_series(computed, load_fixture(id));
    INFO(id << ": " << d.detail << " first mismatch " << d.first_mismatch);
    CHECK(d.pass);
    CHECK_FALSE(d.truncated);
}

template <class Fn>
void check_error(ErrorKind kind, Fn&& fn) {
    bool thrown = false;
    try {
        fn();
    } catch (const Error& e) {
        thrown = true;
        CHECK(e.kind() == kind);
    }
    CHECK(thrown);
}

}  // namespace fseries::testing
