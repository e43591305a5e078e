use pyo3::prelude::*;
#[pymodule]
fn thurston_bound_py(_py: Python, _m: &Bound<PyModule>) -> PyResult<()> { Ok(()) }
