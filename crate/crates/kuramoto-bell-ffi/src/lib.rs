pub use kuramoto_bell as _core;
