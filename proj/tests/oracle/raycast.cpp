#include "oracle/raycast.hpp"
