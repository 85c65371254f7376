#ifndef ROS_ALLOC_HPP
#define ROS_ALLOC_HPP

namespace ros {

/// Keeps large freed blocks inside the process instead of returning them to
/// the OS, so per-iteration temporaries of big instances are not page-faulted
/// in again on every step. No-op outside glibc.
void retain_freed_memory();

}  // namespace ros

#endif  // ROS_ALLOC_HPP
