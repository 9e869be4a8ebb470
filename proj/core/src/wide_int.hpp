#pragma once

namespace burgess::detail {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

}  // namespace burgess::detail
