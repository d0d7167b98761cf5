import weyldim._core as _core
