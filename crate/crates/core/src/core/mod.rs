//! Physical parameters, momentum grids, state containers, Gaussian packets,
//! and the classical arrival-time reference.

mod classical;
mod grid;
mod packet;
mod params;
mod state;

pub use classical::{classical_arrival_time, ClassicalArrival, ClassicalState};
pub use grid::MomentumGrid;
pub use packet::{
    gaussian_momentum_amplitude, gaussian_moments, gaussian_position_wavefunction, GaussianPacket,
    PacketMoments,
};
pub use params::PhysicalParams;
pub use state::MomentumState;
