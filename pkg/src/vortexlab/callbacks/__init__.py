from .callbacks import TraceCSVLogger, EnergyStallStopping
