use thiserror::Error;

/// Every failure a geometric construction or check can raise.
///
/// Variant names double as the stable error identifiers printed by the CLI,
/// see [`GeomError::name`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("points coincide; no unique line through them")]
    CoincidentPoints,
    #[error("lines coincide; no unique intersection")]
    CoincidentLines,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("degenerate quadruple for cross-ratio")]
    DegenerateQuadruple,
    #[error("point at infinity where a finite point is required")]
    PointAtInfinity,
    #[error("line at infinity where a finite line is required")]
    InfiniteLine,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("point is the center (singular point) of the conic")]
    CenterOfConic,
    #[error("five-point conic system is ill-conditioned")]
    IllConditioned,
    #[error("point is interior to the conic; no real tangents")]
    InteriorPoint,
    #[error("points are collinear")]
    CollinearPoints,
    #[error("circles are concentric or identical; no radical axis")]
    ConcentricCircles,
    #[error("point lies on the circumcircle; pedal triangle degenerates")]
    DegeneratePedal,
    #[error("pedal vertex is off its sideline")]
    InvalidPedal,
    #[error("offset distance must be finite and non-negative")]
    InvalidOffset,
    #[error("point lies on a sideline of the triangle")]
    OnSideline,
    #[error("could not find a valid pair of sample points on the line")]
    SampleDegenerate,
    #[error("reflection triangle is degenerate")]
    DegenerateReflection,
    #[error("point is not on the circumcircle")]
    NotOnCircumcircle,
    #[error("triangles are not orthologic")]
    NotOrthologic,
    #[error("pedals onto the angle bisectors are degenerate")]
    DegenerateBisectorPedals,
    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),
}

impl GeomError {
    /// Variant name without payload, e.g. `"ConcentricCircles"`.
    pub fn name(&self) -> &'static str {
        match self {
            GeomError::NonFinite(_) => "NonFinite",
            GeomError::ZeroVector => "ZeroVector",
            GeomError::CoincidentPoints => "CoincidentPoints",
            GeomError::CoincidentLines => "CoincidentLines",
            GeomError::NotCollinear => "NotCollinear",
            GeomError::DegenerateQuadruple => "DegenerateQuadruple",
            GeomError::PointAtInfinity => "PointAtInfinity",
            GeomError::InfiniteLine => "InfiniteLine",
            GeomError::DegenerateConic => "DegenerateConic",
            GeomError::CenterOfConic => "CenterOfConic",
            GeomError::IllConditioned => "IllConditioned",
            GeomError::InteriorPoint => "InteriorPoint",
            GeomError::CollinearPoints => "CollinearPoints",
            GeomError::ConcentricCircles => "ConcentricCircles",
            GeomError::DegeneratePedal => "DegeneratePedal",
            GeomError::InvalidPedal => "InvalidPedal",
            GeomError::InvalidOffset => "InvalidOffset",
            GeomError::OnSideline => "OnSideline",
            GeomError::SampleDegenerate => "SampleDegenerate",
            GeomError::DegenerateReflection => "DegenerateReflection",
            GeomError::NotOnCircumcircle => "NotOnCircumcircle",
            GeomError::NotOrthologic => "NotOrthologic",
            GeomError::DegenerateBisectorPedals => "DegenerateBisectorPedals",
            GeomError::UnknownCheckId(_) => "UnknownCheckId",
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
