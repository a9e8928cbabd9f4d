#pragma once

// Text files compiled into the library at configure time.

namespace hypmorse::resources {

const char* tolerances_json();
const char* specfun_oracle_csv();

}  // namespace hypmorse::resources
